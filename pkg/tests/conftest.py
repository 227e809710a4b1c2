import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


def random_rational(rng, num=5, den=5):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_rational_matrix(rng, n, num=5, den=5):
    return [[random_rational(rng, num, den) for _ in range(n)] for _ in range(n)]


def random_symmetric(rng, n=4, num=5, den=5):
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = random_rational(rng, num, den)
    return M


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
