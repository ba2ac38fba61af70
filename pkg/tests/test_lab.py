"""Chain, scans, growth certificates, arrays."""

import copy
import json

import pytest

from godellab import lab, syntax
from godellab.arithmetization import numeral_code
from godellab.encoding import get_scheme, prime_encode
from godellab.lab import (
    VERDICT_DIVERGES,
    MTermSkeleton,
    analyze_diagonal,
    appendix_expansion,
    build_arrays,
    build_sigma_seq,
    build_sigma_sub,
    check_lemma1,
    check_non_identities,
    numeral_code_chain,
    skeleton_denotation,
    verify_certificate,
)
from godellab.numerics import Magnitude

PRIME = get_scheme("prime")
BETA = get_scheme("beta")

GRID_TERMS = [syntax.parse_term(t) for t in ("Sx0", "SSx0", "(x0+0)", "(x0*S0)")]


# ---------------------------------------------------------------------------
# Chain


def test_chain_two_steps_exact_anchors():
    report = numeral_code_chain(PRIME, 2)
    assert report.entries[0] == Magnitude.exact(8)
    assert report.entries[1] == Magnitude.exact(23 * 9699690 ** 3)
    assert report.strictly_increasing
    assert report.steps_verified == 1


def test_chain_five_steps_prime():
    report = numeral_code_chain(PRIME, 5)
    assert report.strictly_increasing
    assert [m.is_exact for m in report.entries] == [True, True, False, False, False]
    assert all(c.verdict == "greater" for c in report.comparisons)


def test_chain_exact_entries_recompute_bit_for_bit():
    report = numeral_code_chain(PRIME, 5)
    for prev, cur in zip(report.entries, report.entries[1:]):
        if cur.is_exact:
            assert prev.is_exact
            assert numeral_code(prev.exact_value, PRIME) == cur


def test_chain_floor_exponents_strictly_increase():
    report = numeral_code_chain(PRIME, 7)
    floors = [m.low2 for m in report.entries if not m.is_exact]
    assert all(a < b for a, b in zip(floors, floors[1:]))


def test_chain_beta_three_steps():
    report = numeral_code_chain(BETA, 3)
    assert report.strictly_increasing
    assert report.entries[0].is_exact
    assert report.steps_verified == 2


def test_chain_rejects_zero_steps():
    with pytest.raises(ValueError):
        numeral_code_chain(PRIME, 0)


def test_chain_deterministic():
    a = numeral_code_chain(PRIME, 6).to_json_dict()
    b = numeral_code_chain(PRIME, 6).to_json_dict()
    assert json.dumps(a) == json.dumps(b)


# ---------------------------------------------------------------------------
# Scans


def test_lemma1_prime_exact_instance():
    report = check_lemma1(PRIME, 50)
    assert report.counterexamples == []
    assert report.exact_checks == 51
    # p = 0 instance: the sequence S,0 codes to 24 > 0
    assert prime_encode([3, 1]) == 24


def test_lemma1_beta():
    report = check_lemma1(BETA, 50)
    assert report.counterexamples == []
    assert report.exact_checks >= 2
    assert report.floor_checks + report.exact_checks == 51


def test_lemma1_floor_route_beyond_materialization():
    from godellab.encoding import PrimeScheme
    tiny = PrimeScheme(max_exact_symbols=10)
    report = check_lemma1(tiny, 200)
    assert report.counterexamples == []
    assert report.exact_checks == 9      # p + 2 <= 10
    assert report.floor_checks == 192


def test_non_identities_both_schemes():
    for scheme in (PRIME, BETA):
        report = check_non_identities(scheme, 100)
        assert report.counterexample_count == 0
        assert [f.name for f in report.families] == [
            "prefix-successor-sequence",
            "successor-of-numeral-code",
            "exists-successor-value",
            "exists-successor-formula",
        ]
        for family in report.families:
            assert family.checked == 101


def test_non_identity_instances():
    # p = 0: the code of "S k_0" is 24, not 0; q = 1: 1 + code("S0") = 25 != 1
    assert prime_encode([3, 1]) == 24
    assert 1 + prime_encode([3, 1]) == 25


def test_exists_formula_symbol_count_is_n_plus_8():
    # E x1 ( x1 = S <numeral: n+1 symbols> ) comes to n + 8 tokens
    for n in (0, 1, 5, 40, 100):
        formula = syntax.Exists(1, syntax.Eq(
            syntax.Var(1), syntax.Succ(syntax.numeral(n))))
        assert len(syntax.symbols_of(formula)) == n + 8
        assert syntax.render(formula) == f"Ex1(x1=S{'S' * n}0)"


# ---------------------------------------------------------------------------
# Certificates


@pytest.mark.parametrize("scheme", [PRIME, BETA], ids=lambda s: s.name)
def test_sigma_seq_diverges(scheme):
    cert = build_sigma_seq(scheme, 8)
    assert cert.verdict == VERDICT_DIVERGES
    assert len(cert.steps) == 8
    assert all(s.unencoded_symbols >= 1 for s in cert.steps)
    assert cert.steps[0].unencoded_symbols >= 1
    assert verify_certificate(cert)


def test_sigma_seq_floors_grow_with_symbol_totals():
    cert = build_sigma_seq(PRIME, 6)
    totals = [s.total_symbols for s in cert.steps]
    assert all(a < b for a, b in zip(totals, totals[1:]))
    assert [s.required_floor.low2 for s in cert.steps] == totals


def test_sigma_seq_deterministic():
    a = json.dumps(build_sigma_seq(PRIME, 8).to_json_dict())
    b = json.dumps(build_sigma_seq(PRIME, 8).to_json_dict())
    assert a == b


@pytest.mark.parametrize("scheme", [PRIME, BETA], ids=lambda s: s.name)
@pytest.mark.parametrize("reading", ["recompute", "outer-num"])
def test_sigma_sub_diverges(scheme, reading):
    cert = build_sigma_sub(scheme, 8, reading)
    assert cert.verdict == VERDICT_DIVERGES
    assert cert.reading == reading
    assert verify_certificate(cert)


def test_sigma_sub_single_step_beats_successor_code():
    cert = build_sigma_sub(PRIME, 1, "recompute")
    assert len(cert.steps) == 1
    assert cert.baseline == Magnitude.exact(8)
    assert cert.baseline_comparison.verdict == "greater"


def test_sigma_sub_readings_recorded_distinctly():
    a = build_sigma_sub(PRIME, 4, "recompute").to_json_dict()
    b = build_sigma_sub(PRIME, 4, "outer-num").to_json_dict()
    assert a["reading"] == "recompute"
    assert b["reading"] == "outer-num"


def test_appendix_expansion_anchors():
    cert = appendix_expansion(8)
    assert cert.verdict == VERDICT_DIVERGES
    assert cert.steps[0].required_floor == Magnitude.exact(8)
    u1 = 23 * 9699690 ** 3
    assert cert.steps[1].required_floor == Magnitude.exact(u1)
    assert cert.steps[2].required_floor == Magnitude.lower_bound(u1 + 1)
    assert cert.comparisons[1].verdict == "greater"
    assert verify_certificate(cert)


def test_appendix_deterministic_bytes():
    a = json.dumps(appendix_expansion(8).to_json_dict())
    b = json.dumps(appendix_expansion(8).to_json_dict())
    assert a == b


def test_verify_certificate_rejects_tampering():
    cert = appendix_expansion(6)
    assert verify_certificate(cert)
    bad = copy.deepcopy(cert)
    bad.steps[3] = lab.GrowthStep(
        index=3,
        unencoded_symbols=bad.steps[3].unencoded_symbols,
        required_floor=bad.steps[2].required_floor,   # no longer increasing
        detail=bad.steps[3].detail,
    )
    assert not verify_certificate(bad)
    worse = copy.deepcopy(cert)
    worse.steps[2] = lab.GrowthStep(
        index=2,
        unencoded_symbols=0,                          # no witness symbol
        required_floor=worse.steps[2].required_floor,
        detail=worse.steps[2].detail,
    )
    assert not verify_certificate(worse)


def test_certificates_reject_bad_args():
    with pytest.raises(ValueError):
        build_sigma_seq(PRIME, 0)
    with pytest.raises(ValueError):
        build_sigma_sub(PRIME, 3, "inward")
    with pytest.raises(ValueError):
        appendix_expansion(0)


# ---------------------------------------------------------------------------
# Arrays and diagonal


def test_build_arrays_shapes_and_anchor():
    bundle = build_arrays(GRID_TERMS, 4, PRIME)
    assert bundle.closed_grid[0][0] == "S0"
    assert bundle.code_grid[0][0] == Magnitude.exact(24)
    assert len(bundle.closed_grid) == 4
    assert all(len(row) == 4 for row in bundle.closed_grid)
    assert all(len(row) == 4 for row in bundle.code_grid)


def test_build_arrays_skeleton_denotations_match_code_grid():
    bundle = build_arrays(GRID_TERMS, 4, PRIME)
    for i in range(4):
        for j in range(4):
            denoted = skeleton_denotation(PRIME, bundle.skeleton_grid[i][j])
            assert denoted is not None
            assert Magnitude.exact(denoted) == bundle.code_grid[i][j]


def test_build_arrays_requires_free_x0():
    with pytest.raises(ValueError):
        build_arrays([syntax.parse_term("S0")], 2, PRIME)


def test_build_arrays_beta_flags_unsearchable_cells():
    bundle = build_arrays([GRID_TERMS[0], GRID_TERMS[2]], 2, BETA)
    flat_flags = [f for row in bundle.floored_cells for f in row]
    flat_mags = [m for row in bundle.code_grid for m in row]
    for flag, mag in zip(flat_flags, flat_mags):
        if not mag.is_exact:
            assert flag


def test_skeleton_overhead_invariant():
    with pytest.raises(ValueError):
        MTermSkeleton(numeral_slots=[Magnitude.exact(3)], overhead_symbols=0)


def test_analyze_diagonal():
    bundle = build_arrays(GRID_TERMS, 4, PRIME)
    report = analyze_diagonal(bundle, 3)
    assert report["row"] == 3 and report["column"] == 3
    assert report["overheadSymbols"] >= 1
    assert report["noSlotSelfContainment"]
    assert all(slot["selfContainment"] == "impossible" for slot in report["slots"])


def test_analyze_diagonal_every_row():
    bundle = build_arrays(GRID_TERMS, 4, PRIME)
    for row in range(4):
        assert analyze_diagonal(bundle, row)["noSlotSelfContainment"]


def test_analyze_diagonal_row_validation():
    bundle = build_arrays(GRID_TERMS, 2, PRIME)
    with pytest.raises(ValueError):
        analyze_diagonal(bundle, 9)
