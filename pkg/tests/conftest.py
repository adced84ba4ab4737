from fractions import Fraction
from itertools import combinations



def det(rows):
    """Laplace expansion; independent of any elimination code."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * det(minor)
    return total


def minor_rank(rows, ncols):
    """Largest k with a nonzero k x k minor."""
    m = len(rows)
    for k in range(min(m, ncols), 0, -1):
        for R in combinations(range(m), k):
            for C in combinations(range(ncols), k):
                if det([[rows[r][c] for c in C] for r in R]) != 0:
                    return k
    return 0



ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
