import json
import subprocess
import sys

import pytest

import qrefl.catalog as C
import qrefl.verify as V
from qrefl.cluster import MutationSequence, Perm
from qrefl.operators import constraints
from qrefl.quivers import builtin


def test_monomial_level_identities():
    assert V.check_re_tau((1, -1, 1, -1, 1, -1, 1, -1)).status
    assert V.check_re_seed().status
    assert V.check_te_seed().status
    assert V.check_te_tau(1).status and V.check_te_tau(-1).status


def test_eta_level_identity_and_negative():
    assert V.check_re_eta((1, -1, 1, -1, 1, -1, 1, -1)).status
    bad = V.check_re_eta((-1, 1, -1, 1, -1, 1, -1, 1))
    assert not bad.status
    assert bad.details.get("witness") is not None


def test_eta_level_without_required_constraints_fails():
    # dropping the whole constraint system must break the identity
    rep = V.check_re_eta((1, -1, 1, -1, 1, -1, 1, -1), rules={})
    assert not rep.status


def test_operator_level_identities():
    assert V.check_re_P().status
    for w in ("P+", "P-", "Pbar-", "Pbar+"):
        assert V.check_te_P(w).status
    assert V.check_te_eta(1).status and V.check_te_eta(-1).status


def test_sign_searches_reproduce_catalog():
    assert set(V.search_good_signs_tau(homogeneous=True)) == C.GOOD_HOMOGENEOUS
    assert set(V.search_good_signs_eta(homogeneous=True)) == C.GOOD_HOMOGENEOUS
    assert set(V.search_good_signs_P()) == C.GOOD_HOMOGENEOUS_P
    full = set(V.search_good_signs_eta(homogeneous=False))
    homog = {t for t in full if t[0] == t[2] == t[4] == t[6]
             and t[1] == t[3] == t[5] == t[7]}
    assert {(t[0], t[1]) for t in homog} == C.GOOD_HOMOGENEOUS
    assert full - homog == C.ETA_EXTRA_SIGNS


def test_wd_certificates():
    for name in ("pnK", "alnK", "pnL", "pnR", "alL", "alR", "FFY", "FFuw"):
        rep = V.check_wd(name)
        assert rep.status, name
        if name in C.STAGE_PLANS:
            assert rep.details["reference_plan_valid"]
    # deliberately broken system
    from qrefl.qtorus import Infeasible, stiemke_grading
    with pytest.raises(Infeasible):
        stiemke_grading([(1, 0), (-1, 0)])


def test_wd_spot_rows():
    vecs = V.wd_vectors("pnK")
    # coordinate #3 tracks the third unfrozen label; its exponent comes
    # only from factors 6 and 7, with coefficient -1
    col = [v[2] for v in vecs]
    assert col == [0, 0, 0, 0, 0, -1, -1, 0, 0, 0]
    vecs = V.wd_vectors("alnK")
    assert [v[0] for v in vecs] == [1, 0, 1, 0, 1, 2, 1, 0, 1, 0]
    # the reference plans reconstruct a unique assignment for pnL
    from qrefl.qtorus import match_stage_plan
    plan = [(tuple(r - 1 for r in rows), tuple(c - 1 for c in cols))
            for rows, cols in C.STAGE_PLANS["pnL"]]
    assign = match_stage_plan(V.wd_vectors("pnL"), plan)
    assert assign is not None
    # reference row 3 tracks the coordinate supported on factors 28, 29
    vecs = V.wd_vectors("pnL")
    coord = assign[2]
    sup = [i + 1 for i, v in enumerate(vecs) if v[coord]]
    assert sup == [28, 29] and vecs[27][coord] == -1 and vecs[28][coord] == -1


def test_k_eps_independence_fast():
    rep = V.check_K_eps_indep("rho24", cutoff=3)
    assert rep.status
    rep = V.check_K_eps_indep("rho13", cutoff=3)
    assert rep.status
    # cutoff 0: both sides are the constant term 1
    assert V.check_K_eps_indep("rho24", cutoff=0).status


def test_rewriting_lemma():
    assert V.check_rewriting_lemma(6).status


def test_full_identity_small_cutoff():
    rep = V.check_re_full(cutoff=2, rep="torus")
    assert rep.status
    assert rep.counters["base_q"] == 31 and rep.counters["base_q2"] == 15
    rep = V.check_re_full(cutoff=2, rep="weyl")
    assert rep.status


def test_rep_agreement():
    assert V.check_rep_agreement(cutoff=2).status


def test_diagrams_with_negatives():
    for name in ("Rcom1+", "Rcom1-", "Rcom2+", "Rcom2-", "Kcom"):
        assert V.check_diagram(name).status, name
    for d in range(len(constraints("econ-a").constraints)):
        assert not V.check_diagram("Rcom1+", drop=d).status
    ncon = len(constraints("econ").constraints) + \
        len(constraints("ccon").constraints)
    for d in range(ncon):
        assert not V.check_diagram("Kcom", drop=d).status


def test_fg_limit_reports():
    for name in ("K-rho24--+", "K-rho24---", "K-rho13--+", "K-rho13---",
                 "R-plus", "R-minus"):
        assert V.check_fg_limit(name).status, name


def test_period_quantum_consistency():
    seed = builtin("B(A2)")
    ms = builtin("R-seq")
    rep = V.check_period(seed, ms.then(ms.inverse()), quantum_cutoff=3)
    assert rep.status
    assert rep.details["quantum_consistent_to_cutoff"]
    assert not V.check_period(seed, MutationSequence((6,), Perm())).status


def test_report_determinism():
    a = V.check_wd("pnK").to_json()
    b = V.check_wd("pnK").to_json()
    assert a == b
    assert "wall" not in a
    data = json.loads(a)
    assert data["status"] == "pass"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "qrefl.cli", *args],
        capture_output=True, text=True)


def test_cli_smoke():
    out = run_cli("quiver", "show", "B(C2)")
    assert out.returncode == 0 and out.stdout.startswith("n 11")
    out = run_cli("verify", "--task", "RE-seed")
    assert out.returncode == 0 and json.loads(out.stdout)["status"] == "pass"
    out = run_cli("search-signs", "--level", "p")
    assert out.returncode == 0 and "+-" in out.stdout
    out = run_cli("wd", "--system", "pnK")
    assert out.returncode == 0
    out = run_cli("limit", "--operator", "R-plus")
    assert out.returncode == 0
    out = run_cli("period", "--quiver", "B(A2)", "--seq", "R-seq",
                  "--round-trip")
    assert out.returncode == 0
    out = run_cli("operator", "limit", "--name", "K-rho24--+", "--ray", "lim24")
    assert out.returncode == 0 and out.stdout.count("dilog") == 3
    out = run_cli("quiver", "show", "nonsense")
    assert out.returncode == 2


def test_composed_monomial_map_respects_target_commutation():
    stL, stR = V._torus_sides()
    target = builtin("B'(C3)")
    assert stL.seed == target
    assert stL.hom.respects_commutation(target)
    assert stR.hom.respects_commutation(target)


def test_composite_dilogs_match_transcribed_products():
    from qrefl.qtorus import QuantumTorus
    stL, stR = V._torus_sides()
    T = QuantumTorus(builtin("B(C3)"))
    for st, reference in ((stL, C.REFLECTION_LHS_FACTORS),
                        (stR, C.REFLECTION_RHS_FACTORS)):
        assert len(st.dilogs) == 46
        for (got_b, got_arg, got_e), (b, e, s, pw) in zip(st.dilogs, reference):
            assert (got_b, got_e) == (b, e)
            assert got_arg == T.monomial(s, pw)


def _perturb_each(base, prefer):
    from qrefl.params import LinSystem, ParamForm
    for i in range(len(base.constraints)):
        rows = [r if j != i else r + ParamForm({"zz": 1})
                for j, r in enumerate(base.constraints)]
        yield i, LinSystem(rows).eliminate(prefer)


def test_operator_level_constraint_necessity():
    # perturbing a relation the composite actually consumes must break
    # the identity; the rows that merely define symbols the monomial
    # tails never see (the first-slot sums and the a3/a6/a9 extension
    # rows) are inert at this level
    base = constraints("3dre")
    prefer = ("e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9",
              "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
              "c5", "c7", "c8", "zz")
    inert = []
    for i, rules in _perturb_each(base, prefer):
        if V.check_re_P(rules=rules).status:
            inert.append(i)
    assert inert == [0, 2, 5, 8, 15, 16, 17]


def test_eta_level_constraint_necessity():
    base = constraints("eta-3dre")
    prefer = ("e1", "e2", "e4", "e5", "e7", "e8", "c4", "c8", "c7",
              "a4", "a8", "a7", "zz")
    inert = []
    for i, rules in _perturb_each(base, prefer):
        if V.check_re_eta(rules=rules).status:
            inert.append(i)
    # the two sums that only define symbols outside the composite
    assert inert == [0, 3]


def test_operator_level_drop_last_block_fails_with_central_witness():
    # dropping the a-equals-c block entirely leaves a substituted system
    # under which the two sides differ
    full = constraints("recon1").extend(constraints("recon2"))
    rules = full.eliminate(("e1", "e2", "e4", "e5", "e7", "e8",
                            "e3", "e6", "e9", "c5", "c7", "c8"))
    rep = V.check_re_P(rules=rules)
    assert not rep.status
    assert rep.details.get("witness") or rep.details.get("outside_group")


def test_cli_out_file(tmp_path):
    out = tmp_path / "report.json"
    r = run_cli("verify", "--task", "TE-seed", "--out", str(out))
    assert r.returncode == 0
    data = json.loads(out.read_text())
    assert data["status"] == "pass"


def test_cli_quiver_mutate_roundtrip(tmp_path):
    show = run_cli("quiver", "show", "B(C2)")
    f = tmp_path / "c2.quiver"
    f.write_text(show.stdout)
    out = run_cli("quiver", "mutate", "--file", str(f),
                  "--seq", "8,3,9,2,7,4,9,2,8,3")
    assert out.returncode == 0
    target = run_cli("quiver", "show", "B'(C2)")
    assert out.stdout == target.stdout
