"""Smoke tests for the loopforge extension module."""

import loopforge as lf


def test_loop_construction():
    z3 = lf.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert type(z3).__name__ == "FiniteLoop"
    assert z3.order == 3 and z3.identity == 0
    assert z3.mul(1, 2) == 0
    assert z3.j_rho().image() == [0, 2, 1]

    q = lf.from_table([[1, 0, 2], [0, 2, 1], [2, 1, 0]])
    assert type(q).__name__ == "Quasigroup"
    assert not q.is_loop()

    try:
        lf.from_table([[0, 1], [1, 1]])
    except ValueError:
        pass
    else:
        raise AssertionError("latin violation not raised")

    text = lf.to_loop_text(z3)
    assert text == "3\n0 1 2\n1 2 0\n2 0 1\n"
    assert lf.loop_from_text(text) == z3


def test_permutations_compose_left_to_right():
    p = lf.Permutation([0, 2, 1])
    q = lf.Permutation([1, 0, 2])
    assert (p * q)[0] == 1
    assert p.then(q) == p * q
    assert lf.Permutation.identity(3).is_identity()
    assert p.inverse() * p == lf.Permutation.identity(3)


def test_properties():
    z3 = lf.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert lf.has_wip(z3).holds
    assert lf.has_wip(z3, lf.WipMethod.translational).holds
    assert lf.has_cip(z3).holds
    assert lf.m_inverse_check(z3, -1).holds == lf.has_wip(z3).holds
    assert lf.centrum(z3) == [0, 1, 2]
    left, middle, right = lf.nuclei(z3)
    assert left == middle == right == [0, 1, 2]
    traits = lf.element_traits(z3, 1)
    assert traits["flexible"] and traits["rho_aipe"] == "true"
    r, l = lf.is_weak_inverse_permutation(z3, z3.j_rho())
    assert r and l


def test_isotopy():
    z3 = lf.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    iso = lf.principal_isotope(z3, 1, 1)
    assert iso.identity == z3.mul(1, 1)
    rep = lf.t_conditions(z3, iso, lf.principal_triple(z3, 1, 1))
    assert rep.t1 and rep.t21 and rep.t
    ws = lf.find_t_witnesses(z3)
    assert [(f, g) for f, g, _ in ws] == [(0, 0), (1, 1), (2, 2)]
    assert lf.is_isotopism(z3, iso, lf.principal_triple(z3, 1, 1))


def test_isomorphy_and_enumeration():
    z4 = lf.from_table([[(x + y) % 4 for y in range(4)] for x in range(4)])
    v4 = lf.from_table([[x ^ y for y in range(4)] for x in range(4)])
    assert lf.find_isomorphism(z4, v4) is None
    assert lf.find_isomorphism(z4, z4) is not None
    assert len(lf.automorphisms(z4)) == 2

    loops4 = lf.enumerate_loops(4)
    assert len(loops4) == 4
    assert len(lf.enumerate_up_to_isomorphism(4)) == 2
    canon, relab = lf.canonical_form(loops4[-1])
    assert canon.identity == 0

    cursor = lf.LoopEnumerator(4)
    first = cursor.next()
    resumed = lf.LoopEnumerator.resume(cursor.state())
    rest = 0
    while resumed.next() is not None:
        rest += 1
    assert rest == 3 and first is not None

    a = lf.random_loop(8, 5)
    b = lf.random_loop(8, 5)
    assert a == b


def test_verify():
    rep = lf.verify("thm3.1a", max_order=4)
    assert rep.status == "confirmed-exhaustive"
    assert rep.instances_checked >= 9
    d = rep.to_dict()
    assert d["claim"] == "thm3.1a" and d["violations"] == 0

    ids = [cid for cid, _ in lf.registered_claims()]
    assert "thm3.2" in ids and "sec4.cip" in ids

    assert lf.find_counterexample("lem2.2", 25, seed=3) is None

    rep6 = lf.verify("thm3.3", max_order=6, threads=4)
    assert rep6.status == "counterexample"
    w = rep6.to_dict()["witnesses"][0]
    assert lf.recheck_witness("thm3.3", w)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
