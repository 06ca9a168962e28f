import json
from pathlib import Path

import pytest

from spectre.arith import sieve_primes
from spectre.recognize import (
    M1Table, RecognitionOutcome, RecognizeConfig, classify_large_rank,
    identify_type_and_field, make_context, recognize, recognize_alternating,
    recognize_bounded_rank,
)
from spectre.spectra import GroupName, MinSpec, default_registry, psl2_nu

HERE = Path(__file__).parent
GOLDEN = json.loads((HERE / "golden" / "alt_mu.json").read_text())


def alt_mu(n):
    return [int(x) for x in GOLDEN[str(n)]]


def steps(outcome_or_trail):
    trail = getattr(outcome_or_trail, "trail", outcome_or_trail)
    return [(d.branch, d.step, d.verdict) for d in trail]


def test_alternating_examples():
    assert recognize(alt_mu(15)).result == GroupName.alternating(15)
    assert recognize(alt_mu(20)).result == GroupName.alternating(20)
    trail = []
    assert recognize_alternating(alt_mu(9), trail) == GroupName.alternating(9)
    assert ("alternating", "small_pi", "accept") in steps(trail)


def test_alternating_rejects_foreign_prime():
    mu = alt_mu(20)
    big = next(p for p in sieve_primes(2000) if p > 810)
    mu[0] *= big
    trail = []
    assert recognize_alternating(mu, trail) is None
    assert trail[-1].step == "tau" and trail[-1].verdict == "reject"
    assert recognize(mu).is_empty


def test_trivial_input_is_empty():
    out = recognize([2])
    assert out.is_empty and out.twin is None
    assert out.trail[-1].verdict == "empty"


def test_psl2_small():
    out = recognize([3, 4, 7])
    assert out.result == GroupName.classical("L", 2, 7)
    assert ("bounded_rank", "compare", "accept") in steps(out)


def test_bounded_rank_paths():
    ctx = make_context()
    mu81 = MinSpec(psl2_nu(81))
    # (81 + 1) / 2 = 41 is also m1 of L2(41), so both fields are candidates
    assert ctx.m1.odd_candidates("L", 2, mu81.max) == [41, 81]
    assert recognize_bounded_rank(mu81, 1, ctx) == GroupName.classical("L", 2, 81)
    mu8 = MinSpec(psl2_nu(8))
    # max 9 proposes odd fields 9 and 17; neither matches, q = 8 comes from 2^e
    assert ctx.m1.odd_candidates("L", 2, mu8.max) == [9, 17]
    trail = []
    assert recognize_bounded_rank(mu8, 1, ctx, trail) == GroupName.classical("L", 2, 8)
    assert dict(trail[-1].values)["q"] == "8"


def test_bounded_rank_size_guard():
    trail = []
    assert recognize_bounded_rank(MinSpec([5, 7, 9, 11]), 1, make_context(), trail) is None
    assert trail[0].step == "size" and trail[0].verdict == "reject"


def test_m1_table_validation():
    from fractions import Fraction
    from spectre.arith import IntPoly
    from spectre.recognize import M1Entry
    with pytest.raises(ValueError):
        M1Table([M1Entry("L", 2, Fraction(1, 2), IntPoly((0, 1)))])
    with pytest.raises(ValueError):
        M1Table([M1Entry("L", 2, Fraction(1, 1), IntPoly((1, 2)))])
    assert len(make_context().m1.entries) == 2


def test_sporadic():
    assert recognize([5, 6, 8, 11]).result == GroupName.sporadic("M11")


def _fixture(name):
    reg = default_registry()
    fam, n, q = name
    return reg.fixtures[(fam, n, q)]


def test_large_rank_symplectic_fixture():
    trail = []
    found = classify_large_rank(_fixture(("S", 12, 3)), make_context(), trail)
    assert found == [GroupName.classical("S", 12, 3)]
    vals = {d.step: dict(d.values) for d in trail}
    assert vals["stage3"]["t"] == "10"
    assert vals["stage5"]["p"] == "3"
    assert vals["stage5"]["zeta"] == [str((3 ** 12 + 1) // 2)]
    twins = [d for d in trail if d.step == "twins"]
    assert twins and dict(twins[0].values)["element"] == str(3 * (3 ** 11 + 1))


def test_large_rank_too_many_atoms():
    mu = MinSpec(sieve_primes(1000)[:150])
    trail = []
    assert classify_large_rank(mu, make_context(), trail) == []
    assert trail[-1].step == "stage1"


def test_large_rank_not_split():
    mu = MinSpec([6, 15, 35, 77, 22])
    trail = []
    assert classify_large_rank(mu, make_context(), trail) == []
    assert trail[-1].step == "stage2"


def test_identify_type_and_field():
    s = (3 ** 12 + 1) // 2
    assert identify_type_and_field(3, 10, [s]) == [GroupName.classical("S", 12, 3),
                                                   GroupName.classical("O_odd", 12, 3)]
    assert identify_type_and_field(3, 4, [41]) == [GroupName.classical("S", 4, 3),
                                                   GroupName.classical("O_odd", 4, 3)]
    # t = 10 forces rank 12, which 41 cannot match
    assert identify_type_and_field(3, 10, [41]) == []
    assert identify_type_and_field(3, 10, [5, 7, 11, 13]) == []
    # O+28(2) has coclique number 10, so t = 11 leaves the symplectic group
    assert identify_type_and_field(2, 11, [8191, 8193]) == [GroupName.classical("S", 13, 2)]


def test_identify_orthogonal_minus_three_elements():
    from spectre.spectra import zeta_set
    from spectre.splitgraph import coclique_size_formula
    n, q = 12, 5
    S = zeta_set("O_minus", n, q)
    t = coclique_size_formula("O_minus", n)
    assert identify_type_and_field(5, t, S) == [GroupName.classical("O_minus", n, q)]


def test_twin_pair(tmp_path):
    cfg = RecognizeConfig(data_dir=str(HERE / "data" / "twins"))
    out = recognize([7, 8, 9, 10, 12, 15], cfg)
    assert out.result == GroupName.classical("S", 3, 2)
    assert out.twin == GroupName.classical("O_plus", 4, 2)


def test_outcome_json_round_trip():
    for M in ([3, 4, 7], [2], alt_mu(12)):
        out = recognize(M)
        blob = json.dumps(out.to_json())
        assert RecognitionOutcome.from_json(json.loads(blob)).to_json() == out.to_json()


def test_threads_do_not_change_result():
    mu = psl2_nu(49)
    a = recognize(mu, RecognizeConfig(threads=1))
    b = recognize(mu, RecognizeConfig(threads=4))
    assert a.to_json() == b.to_json()
    assert a.result == GroupName.classical("L", 2, 49)


def test_empty_is_sound_on_known_tables():
    # any input matching a tabulated spectrum must not come back Empty
    known = [MinSpec(alt_mu(n)) for n in range(5, 14)]
    known += [MinSpec(psl2_nu(q)) for q in (5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)]
    known += list(default_registry().sporadic.values())
    for M in ([2], [6], [2, 3], [4, 5, 6], [3, 5, 7], [10, 12]):
        out = recognize(M)
        if out.is_empty:
            assert MinSpec(M) not in known
