import itertools

import pytest

import tetralab


def test_orientation_rule():
    assert tetralab.orientation("0***", "01**") == "outgoing"
    assert tetralab.orientation("*1**", "01**") == "incoming"
    assert len(tetralab.enumerate_faces(4, 1)) == 32


def test_ising_relation_matches_products():
    sign = {"+": 1, "-": -1}
    expect = set()
    for a, b, c, d in itertools.product("+-", repeat=4):
        if sign[a] * sign[b] == sign[c] * sign[d]:
            expect.add((a + b, c + d))
    assert set(tetralab.ising_R()) == expect


def test_spin_sum_against_python_loop():
    L = 2
    acc = {}
    for spins in itertools.product((1, -1), repeat=L**3):
        def s(x, y, z):
            return spins[(x % L) + L * ((y % L) + L * (z % L))]
        h = 0
        for x, y, z in itertools.product(range(L), repeat=3):
            h += s(x, y, z) * (s(x + 1, y, z) + s(x, y + 1, z) + s(x, y, z + 1))
        acc[h] = acc.get(h, 0) + 1
    assert tetralab.z_spin("2x2x2") == acc


def test_codes():
    assert tetralab.is_induced_cycle(["0100", "1100", "1101", "1001", "0001", "0011", "0111", "0110"])
    assert tetralab.min_distance(["1111", "0011", "1001", "0000", "1100", "0110"]) == 2
    with pytest.raises(ValueError):
        tetralab.min_distance(["01", "011"])


def test_reports():
    (ybe,) = tetralab.run_check("ybe-corr")
    assert ybe["holds"] and ybe["status"] == "holds"
    (tables,) = tetralab.run_check("tables")
    assert tables["star"] == tetralab.tables_star()
    assert "relate" in tetralab.check_ids()
    with pytest.raises(ValueError):
        tetralab.run_check("no-such-check")
