"""Plain-text rendering for pqfib output - tables and PASS/FAIL labels."""

import re
from typing import List, Optional, Sequence


class Colors:
    """ANSI color codes for terminal output."""

    RED = '\033[31m'
    GREEN = '\033[32m'
    CYAN = '\033[36m'

    BOLD = '\033[1m'

    RESET = '\033[0m'

    @classmethod
    def strip_colors(cls, text: str) -> str:
        """Remove all ANSI color codes from text."""
        return re.sub(r'\033\[[0-9;]+m', '', text)


def colorize(text: str, color: str, bold: bool = False) -> str:
    """
    Colorize text with ANSI codes.

    Args:
        text: Text to colorize
        color: Color code from Colors class
        bold: Make text bold

    Returns:
        Colorized text
    """
    if bold:
        return f"{Colors.BOLD}{color}{text}{Colors.RESET}"
    return f"{color}{text}{Colors.RESET}"


def status_label(passed: bool, color: bool = False) -> str:
    """PASS or FAIL, green or red when color is requested."""
    label = "PASS" if passed else "FAIL"
    if not color:
        return label
    return colorize(label, Colors.GREEN if passed else Colors.RED, bold=True)


def heading(text: str, color: bool = False) -> str:
    return colorize(text, Colors.CYAN, bold=True) if color else text


def _align_cell(text: str, width: int, how: str) -> str:
    if how == 'right':
        return text.rjust(width)
    if how == 'center':
        return text.center(width)
    return text.ljust(width)


def format_table(
    headers: Sequence[str],
    rows: Sequence[Sequence[object]],
    align: Optional[List[str]] = None,
    color: bool = False,
) -> str:
    """
    Format rows as an aligned text table.

    Args:
        headers: Column headers
        rows: Row data (list of lists); cells go through str
        align: 'left', 'right' or 'center' per column (default: left)
        color: Bold the header row

    Returns:
        The table, lines joined by newlines, no trailing newline
    """
    cells = [[str(cell) for cell in row] for row in rows]
    # Widths are measured without ANSI codes so colored cells line up.
    col_widths = [len(str(h)) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            col_widths[i] = max(col_widths[i], len(Colors.strip_colors(cell)))

    if align is None:
        align = ['left'] * len(headers)

    header_line = ' | '.join(_align_cell(str(h), col_widths[i], align[i]) for i, h in enumerate(headers))
    lines = [colorize(header_line, Colors.BOLD) if color else header_line]
    lines.append('-' * (sum(col_widths) + 3 * (len(headers) - 1)))

    for row in cells:
        padded = []
        for i, cell in enumerate(row):
            extra = len(cell) - len(Colors.strip_colors(cell))
            padded.append(_align_cell(cell, col_widths[i] + extra, align[i]))
        lines.append(' | '.join(padded).rstrip())
    return '\n'.join(lines)

