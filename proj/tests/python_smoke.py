"""Smoke-checks the python module end to end.

Works both against an installed `pmdsg` package and against a bare `_pmdsg`
extension on PYTHONPATH (the ctest wiring uses the latter).
"""

import math
import sys

try:
    import pmdsg
except ImportError:
    import _pmdsg as pmdsg


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def main():
    g = pmdsg.Graph.clique(4)
    assert g.n == 4 and g.m == 6 and not g.weighted
    assert g.degree(0) == 3
    assert sorted(g.neighbors(0)) == [1, 2, 3]

    assert approx(pmdsg.f_p(g, [0, 1, 2, 3], 2.0), 36.0)
    assert approx(pmdsg.m_p(g, [0, 1, 2, 3], 1.0), 3.0)
    # finite negative p with an isolated member is undefined => None
    assert pmdsg.m_p(g, [0], -1.0) is None
    assert pmdsg.m_p(g, [0], -math.inf) == 0.0

    blocks = pmdsg.Graph.from_edges(
        [(u, v, 1.0) for u in range(4) for v in range(u + 1, 4)]
        + [(10, 11, 1.0), (11, 12, 1.0)],
    )
    assert blocks.n == 7 and blocks.m == 8

    peel = pmdsg.greedy_p(blocks, 2.0)
    assert sorted(peel.best_set) == [0, 1, 2, 3]
    assert approx(peel.best_density, 3.0)
    assert pmdsg.lazy_greedy_p(blocks, 2.0, eps=0.0).order == peel.order

    simple = pmdsg.simple_greedy_p(blocks, -math.inf)
    degen, core = pmdsg.degeneracy_maxcore(blocks)
    assert degen == 3 and sorted(core) == [0, 1, 2, 3]
    assert approx(simple.best_density, 3.0)

    it = pmdsg.greedy_pp(blocks, 1.0, iters=8)
    assert it.iterations == 8 and len(it.trajectory) == 8
    assert approx(it.best.best_density, 3.0)

    spp = pmdsg.simple_pp(blocks, 4, [1.0, -1.0])
    assert spp.ps == [1.0, -1.0] and len(spp.per_p) == 2

    fw = pmdsg.frank_wolfe(blocks, 1.0, iters=100)
    assert len(fw.objective_trace) == 101
    assert approx(fw.rounded.best_density, 3.0)

    star_density, star_set = pmdsg.brute_force_opt(blocks, 1.0)
    assert approx(star_density, 3.0) and sorted(star_set) == [0, 1, 2, 3]

    path = pmdsg.bickle_graph(6, 1)
    assert path.n == 6 and path.m == 5

    assert pmdsg.x3c_decide(2, [[0, 1, 2], [3, 4, 5]], 0.5, True)
    assert not pmdsg.x3c_decide(2, [[0, 1, 2], [1, 2, 3]], 0.5, True)

    try:
        pmdsg.greedy_p(g, -1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("greedy_p accepted p < 0")

    print("python smoke: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
