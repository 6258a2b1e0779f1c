import itertools
import os
import subprocess

import pytest

import downset


def closure(vectors, box):
    return {u for u in box if any(all(a <= b for a, b in zip(u, v)) for v in vectors)}


def test_antichain_canonicalizes():
    a = downset.Antichain(2, [[1, 1], [0, 1], [1, 0]])
    assert a.elements == [[1, 1]]
    assert len(downset.Antichain(2)) == 0
    assert downset.Antichain.from_text(a.to_text()) == a
    assert [1, 0] in a


def test_vector_helpers():
    assert downset.compare([1, 2], [1, 3]) == "less"
    assert downset.compare([2, 1], [1, 2]) == "incomparable"
    assert downset.meet([3, 1], [2, 4]) == [2, 1]


@pytest.mark.parametrize("backend", downset.backends())
def test_operations_match_brute_force(backend):
    a = downset.Antichain(2, [[2, 0], [0, 2]])
    b = downset.Antichain(2, [[1, 1]])
    box = list(itertools.product(range(4), repeat=2))
    u = downset.union(a, b, backend=backend)
    n = downset.intersect(a, b, backend=backend)
    assert u.elements == [[0, 2], [1, 1], [2, 0]]
    assert n.elements == [[0, 1], [1, 0]]
    assert closure([tuple(v) for v in n.elements], box) == closure([(2, 0), (0, 2)], box) & closure([(1, 1)], box)
    assert downset.member(a, [1, 0], backend=backend)
    assert not downset.member(a, [1, 1], backend=backend)


def test_stats_and_errors():
    st = downset.OpStats()
    downset.member(downset.Antichain(2, [[2, 0]]), [1, 1], backend="kdtree", stats=st)
    assert st.comparisons > 0
    with pytest.raises(downset.Error):
        downset.member(downset.Antichain(2, [[2, 0]]), [1, 1, 1])
    with pytest.raises(downset.Error):
        downset.union(downset.Antichain(2), downset.Antichain(2), backend="btree")


def test_adaptive_choice():
    assert downset.choose_backend(2, 16, 100) == "kdtree"
    assert downset.choose_backend(64, 1000, 1000) == "list"


def test_combinatorics():
    assert [downset.count_2d(l) for l in range(1, 6)] == [2, 6, 20, 70, 252]
    assert downset.count_2d(100) > 2**190
    assert downset.count_antichains(3, 2) == 20
    assert downset.width(2, 4) == 4
    assert downset.layer_size(2, 3, 2) == 3
    assert downset.conjecture(3, 2)["equal"]
    a, short = downset.random_antichain(1, 2, 5, 7)
    assert len(a) == 1 and short


def test_parity():
    r = downset.solve_parity("0 1 0 0,1; 1 2 0 1;", backend="cst")
    assert r["winners"] == ["even", "even"]
    assert r["strategy"] == [1, 1]
    assert r["strategy_ok"]
    assert downset.zielonka("0 1 1 0;") == ["odd"]
    with pytest.raises(downset.Error):
        downset.solve_parity("0 1 0 ;")


def test_bench_is_deterministic():
    first = downset.bench_csv("union", [10, 20], k=16, seed=3)
    assert first == downset.bench_csv("union", [10, 20], k=16, seed=3)
    assert first.splitlines()[0] == "t,backend,op,metric,value,out_size,seed"


@pytest.mark.skipif("DOWNSET_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees(tmp_path):
    f = tmp_path / "a.txt"
    f.write_text(downset.Antichain(2, [[2, 0], [0, 2]]).to_text())
    out = subprocess.run([os.environ["DOWNSET_CLI"], "member", str(f), "1 0"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "true\n"
