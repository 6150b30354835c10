import csv
import json

import pytest

from zp2cover import harness, reporting
from zp2cover.errors import ConfigError, InvalidParameterError
from zp2cover.harness import (
    audit,
    config_hash,
    default_config,
    default_fixture_specs,
    gray_fixture_specs,
    load_config,
    run_suite,
    suite_json_doc,
    verify_counterexample,
)


def spec_params(family, **parameters):
    return {"code": {"family": family, "parameters": parameters}}


def test_thm_i_confirmed_and_contradicted():
    good = audit("thm_i", {"p": 2, "n": 3})
    assert good.verdict == "confirmed"
    assert good.claimed == 3 and good.computed == 3

    bad = audit("thm_i", {"p": 3, "n": 1})
    assert bad.verdict == "contradicted"
    assert bad.computed == 1 and bad.claimed == 2
    assert verify_counterexample(bad)


def test_thm_j_small_cases():
    assert audit("thm_j", {"p": 2, "n": 2}).verdict == "confirmed"
    bad = audit("thm_j", {"p": 2, "n": 1})
    assert bad.verdict == "contradicted"
    assert bad.computed == 0  # the unit repetition code of length 1 is the whole space
    assert verify_counterexample(bad)


def test_thm_k_within_bounds():
    rep = audit("thm_k", {"p": 2, "n": 1})
    assert rep.verdict == "within_bounds"
    assert rep.claimed == [3, 4] and rep.computed == 3
    coset = audit("thm_k", {"p": 2, "n": 1, "method": "cosets"})
    assert coset.computed == rep.computed


def test_thm_l_radius_and_code_params():
    bounds = audit("thm_l", {"p": 2, "n": 2})
    assert bounds.verdict == "within_bounds" and bounds.computed == 4

    below = audit("thm_l", {"p": 2, "n": 1})
    assert below.verdict == "contradicted"  # exact radius 1 sits under the claimed [2, 3]
    assert below.computed == 1
    assert verify_counterexample(below)

    params = audit("thm_l", {"p": 2, "n": 1, "claim": "code_params"})
    assert params.verdict == "contradicted"
    assert params.computed["d_hamming"] == 1 and params.claimed["d_hamming"] == 2
    assert verify_counterexample(params)

    with pytest.raises(InvalidParameterError):
        audit("thm_l", {"p": 2, "n": 1, "claim": "nonsense"})


def test_thm_m_verdicts():
    assert audit("thm_m", {"p": 2, "m": 2, "n": 1}).verdict == "within_bounds"
    bad = audit("thm_m", {"p": 2, "m": 1, "n": 1})
    assert bad.verdict == "contradicted" and bad.computed == 1
    assert verify_counterexample(bad)


def test_thm_wdist_confirmed():
    rep = audit("thm_wdist", {"p": 3, "n": 1})
    assert rep.verdict == "confirmed"
    assert rep.computed["lee"] == {0: 1, 18: 8}


def test_prop_c_agreement():
    rep = audit("prop_c", {"p": 2, "trials": 10, "seed": 1})
    assert rep.verdict == "confirmed"
    assert rep.computed == {"trials": 10, "agreed": 10}


def test_prop_d_confirmed_and_contradicted():
    ok = audit("prop_d", spec_params("zero_div_rep", p=2, n=2, z=2))
    assert ok.verdict == "confirmed"

    bad = audit("prop_d", spec_params("zero_div_rep", p=3, n=1, z=3))
    assert bad.verdict == "contradicted"
    assert bad.computed == {"lee_radius": 1, "gray_hamming_radius": 2}
    assert verify_counterexample(bad)


def test_prop_e_three_verdicts():
    ok = audit("prop_e", spec_params("zero_div_rep", p=2, n=2, z=2))
    assert ok.verdict == "confirmed"

    unsat = audit("prop_e", spec_params("zero_div_rep", p=3, n=1, z=3))
    assert unsat.verdict == "unsatisfiable"
    assert unsat.computed["paper_bound"] is None
    assert unsat.computed["exact_ball_bound"] == 1 <= unsat.computed["exact_radius"]

    bad = audit("prop_e", spec_params("unit_rep", p=3, n=1, u=1))
    assert bad.verdict == "contradicted"  # paper bound 1 exceeds the exact radius 0
    assert bad.counterexample["failing_side"] == "paper"
    assert verify_counterexample(bad)


def test_thm_f_confirmed():
    rep = audit("thm_f", spec_params("unit_rep", p=2, n=2, u=1))
    assert rep.verdict == "confirmed"
    assert rep.computed == {"exact_radius": 2, "external_distance": 2}


def test_thm_g_and_cb_hold_on_seeded_sets():
    assert audit("thm_g", {"trials": 5, "seed": 3}).verdict == "confirmed"
    assert audit("thm_cb", {"trials": 5, "seed": 4}).verdict == "confirmed"


def test_skipped_resource():
    rep = audit("thm_k", {"p": 5, "n": 1})
    assert rep.verdict == "skipped_resource"
    assert rep.computed is None and "cap" in rep.detail


def test_audit_unknown_id():
    with pytest.raises(InvalidParameterError):
        audit("thm_x", {})


def test_verify_counterexample_requires_one():
    rep = audit("thm_i", {"p": 2, "n": 1})
    with pytest.raises(InvalidParameterError):
        verify_counterexample(rep)


SMALL_CONFIG = {
    "version": 1,
    "audits": [
        {"id": "thm_i", "params": {"p": 2, "n": 2}},
        {"id": "thm_i", "params": {"p": 3, "n": 1}},
        {"id": "prop_c", "params": {"p": 2, "trials": 5, "seed": 9}},
        {"id": "prop_e", "params": {"code": {"family": "zero_div_rep", "parameters": {"p": 3, "n": 1, "z": 3}}}},
        {"id": "thm_k", "params": {"p": 5, "n": 1}},
    ],
}


def test_run_suite_order_totals_and_exit_flag():
    result = run_suite(SMALL_CONFIG)
    assert [r.theorem_id for r in result.reports] == [a["id"] for a in SMALL_CONFIG["audits"]]
    totals = result.totals
    assert totals["confirmed"] == 2
    assert totals["contradicted"] == 1
    assert totals["unsatisfiable"] == 1
    assert totals["skipped_resource"] == 1
    assert result.any_contradicted


def test_suite_bodies_are_deterministic():
    a = run_suite(SMALL_CONFIG)
    b = run_suite(SMALL_CONFIG)
    body_a = json.dumps([r.body() for r in a.reports], sort_keys=True)
    body_b = json.dumps([r.body() for r in b.reports], sort_keys=True)
    assert body_a == body_b
    doc_a = suite_json_doc(a, generated_at="fixed")
    doc_b = suite_json_doc(b, generated_at="fixed")
    assert json.dumps(doc_a["reports"], sort_keys=True) == json.dumps(doc_b["reports"], sort_keys=True)
    assert doc_a["suite"]["config_hash"] == doc_b["suite"]["config_hash"]
    assert doc_a["suite"]["totals"] == doc_b["suite"]["totals"]
    # runtime lives only in the envelope
    assert all("runtime" not in json.dumps(r) for r in doc_a["reports"])
    assert len(doc_a["suite"]["runtimes"]) == len(a.reports)


def test_empty_config():
    result = run_suite({"version": 1, "audits": []})
    assert result.reports == []
    assert not result.any_contradicted
    assert reporting.render_summary(result).startswith("audits=0")


def test_config_validation_errors():
    with pytest.raises(ConfigError, match="version"):
        load_config(json.dumps({"version": 2, "audits": []}))
    with pytest.raises(ConfigError, match=r"audits\[1\].id"):
        load_config(json.dumps({"version": 1, "audits": [{"id": "thm_i"}, {"id": "bogus"}]}))
    with pytest.raises(ConfigError, match="audits must be a list"):
        load_config(json.dumps({"version": 1, "audits": {}}))
    with pytest.raises(ConfigError, match=r"audits\[0\].params"):
        load_config(json.dumps({"version": 1, "audits": [{"id": "thm_i", "params": 3}]}))
    with pytest.raises(ConfigError, match="not valid JSON"):
        load_config("{nope")


def test_config_hash_stable_under_key_order():
    a = {"version": 1, "audits": [{"id": "thm_i", "params": {"p": 2, "n": 1}}]}
    b = {"audits": [{"params": {"n": 1, "p": 2}, "id": "thm_i"}], "version": 1}
    assert config_hash(a) == config_hash(b)


def test_default_config_is_valid_and_covers_every_id():
    config = default_config()
    harness.validate_config(config)
    ids = {entry["id"] for entry in config["audits"]}
    assert ids == set(harness.THEOREM_IDS)
    assert len(config["audits"]) >= 20


def test_fixture_specs_build():
    specs = default_fixture_specs()
    assert len(specs) >= 15
    for spec in specs:
        code = spec.build()
        assert code.M >= 1
    gray = gray_fixture_specs()
    for spec in gray:
        code = spec.build()
        assert code.ctx.p ** (code.ctx.p * code.n) <= 1 << 20


def test_reporting_table_and_csv(tmp_path):
    result = run_suite(SMALL_CONFIG)
    table = reporting.render_table(result.reports)
    assert "THEOREM_ID" in table and "contradicted" in table
    csv_path = tmp_path / "report.csv"
    reporting.write_csv(result.reports, csv_path)
    with open(csv_path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][0] == "theorem_id"
    assert len(rows) == 1 + len(result.reports)


def test_reporting_suite_outputs(tmp_path):
    result = run_suite({
        "version": 1,
        "audits": [
            {"id": "thm_k", "params": {"p": 2, "n": 1}},
            {"id": "thm_m", "params": {"p": 2, "m": 1, "n": 1}},
        ],
    })
    doc = suite_json_doc(result)
    written = reporting.write_suite_outputs(result, doc, tmp_path / "out")
    names = {p.name for p in written}
    assert {"report.json", "report.csv", "report.txt", "verdicts.png", "bounds.png"} <= names
    for p in written:
        assert p.stat().st_size > 0
    loaded = json.loads((tmp_path / "out" / "report.json").read_text())
    assert loaded["suite"]["totals"]["within_bounds"] == 1
    assert loaded["suite"]["totals"]["contradicted"] == 1
