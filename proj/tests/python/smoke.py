"""End-to-end smoke test of the Python bindings."""

import os
import sys
import tempfile

sys.path.insert(0, os.environ.get("LAMANENUM_EXT_DIR", "."))

import _lamanenum as lm  # noqa: E402

TRIANGLE = [(0, 0), (1, 0), (0, 1)]
QUAD = [(0, 0), (10, 1), (9, 9), (1, 8)]
SIX = [(0, 0), (4, 1), (2, -1), (-1, 3), (1, 2), (3, 3)]
SIX_F = [(1, 3), (1, 5), (2, 6), (4, 5), (5, 6)]


def test_predicates():
    assert lm.orientation((0, 0), (1, 0), (0, 1)) == 1
    assert lm.orientation((0, 0), (1, 1), (2, 2)) == 0
    assert lm.incircle((0, 0), (1, 0), (0, 1), ("0.2", "0.2")) == 1
    assert lm.incircle((0, 0), (1, 0), (1, 1), (0, 1)) == 0
    assert lm.incircle_tiebroken((0, 0), (1, 0), (1, 1), (0, 1)) == 1


def test_generic():
    assert lm.check_generic(TRIANGLE)["ok"]
    bad = lm.check_generic([(0, 0), (1, 1), (2, 2), (0, 5)])
    assert not bad["ok"]
    assert bad["collinear_triples"] == [[1, 2, 3]]


def test_cdt():
    edges = lm.build_cdt(QUAD)
    assert len(edges) == 5
    assert sum(1 for (_, _, c) in edges if c) == 0
    constrained = lm.build_cdt(SIX, SIX_F)
    assert sum(1 for (_, _, c) in constrained if c) == len(SIX_F)


def test_enumeration_matches_oracle():
    for pts, f in [(TRIANGLE, []), (QUAD, []), (SIX, SIX_F)]:
        fast = lm.enumerate_frameworks(pts, f)
        assert lm.count_frameworks(pts, f) == len(fast)
        slow = lm.enumerate_frameworks(pts, f, 0, True)
        assert fast == slow
        oracle = {tuple(map(tuple, fw)) for fw in lm.brute_frameworks(pts, f)}
        assert {tuple(map(tuple, fw)) for fw in fast} == oracle
        root = lm.framework_root(pts, f)
        assert fast[0] == root
        for fw in fast:
            assert len(fw) == 2 * len(pts) - 3
            assert all(tuple(c) in {tuple(e) for e in fw} for c in f)


def test_truncation_and_errors():
    assert len(lm.enumerate_frameworks(QUAD, [], 1)) == 1
    try:
        lm.count_frameworks([(0, 0), (1, 1), (2, 2), (0, 5)])
    except lm.GenericityError:
        pass
    else:
        raise AssertionError("collinear points must be rejected")
    try:
        lm.count_frameworks(QUAD, [(1, 3), (2, 4)])
    except lm.ConstraintError:
        pass
    else:
        raise AssertionError("crossing constraints must be rejected")


def test_parse_instance():
    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("# demo\n3\n0 0\n1 0\n0 1\n0\n")
        path = f.name
    try:
        inst = lm.parse_instance(path)
        assert inst["points"] == [("0", "0"), ("1", "0"), ("0", "1")]
        assert inst["constraints"] == []
    finally:
        os.unlink(path)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok: {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
