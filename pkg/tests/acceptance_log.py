"""Collected pass/fail lines for the acceptance criteria."""

LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}"
    if detail:
        line += f" :: {detail}"
    LINES.append(line)
    print(line)
    return line
