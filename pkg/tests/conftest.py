import itertools

import pytest

from symgen.perm import Permutation


def closure(gens, n):
    """All elements of <gens> by breadth-first multiplication (brute force oracle)."""
    ident = tuple(range(1, n + 1))
    seen = {ident}
    frontier = [ident]
    imgs = [g.images for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in imgs:
                y = tuple(x[g[i] - 1] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def cyc(text, n):
    from symgen.perm import parse

    return parse(text, n)


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(12345)


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE: dict = {}


def record(criterion: int, title: str, ok: bool, detail: str = "") -> bool:
    """Store one acceptance outcome; an item may record several parts, all must pass."""
    prev = ACCEPTANCE.get(criterion)
    parts = (prev[2] + "; " if prev else "") + detail
    ACCEPTANCE[criterion] = (title, (prev[1] if prev else True) and ok, parts)
    line = f"[criterion {criterion:2d}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
