import json
import subprocess
import sys
from pathlib import Path

from orbicalc.corpus import corpus_dir

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "src" / "orbicalc" / "schemas"


def run_cli(*argv, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "orbicalc", *argv],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, proc.stderr
    return proc


def check_schema(instance, schema) -> None:
    """A deliberately small validator: types, required, properties, items, enum."""
    t = schema.get("type")
    if t == "object":
        assert isinstance(instance, dict), schema.get("$id", schema)
        for key in schema.get("required", []):
            assert key in instance, f"missing {key}"
        for key, sub in schema.get("properties", {}).items():
            if key in instance and sub:
                check_schema(instance[key], sub)
    elif t == "array":
        assert isinstance(instance, list)
        items = schema.get("items")
        if items:
            for x in instance:
                check_schema(x, items)
    elif t == "integer":
        assert isinstance(instance, int) and not isinstance(instance, bool)
    elif t == "string":
        assert isinstance(instance, str)
        if "enum" in schema:
            assert instance in schema["enum"]
    elif t == "boolean":
        assert isinstance(instance, bool)


def load_schema(name):
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())


def test_group_command_schema():
    out = json.loads(run_cli("group", "s3").stdout)
    check_schema(out, load_schema("group"))
    assert out["order"] == 6
    assert out["class_sizes"] == [1, 2, 3]


def test_irreps_command():
    out = json.loads(run_cli("irreps", "q8").stdout)
    check_schema(out, load_schema("irreps"))
    kinds = sorted((e["dim"], e["end_type"]) for e in out["entries"])
    assert kinds == [(1, "R")] * 4 + [(4, "H")]
    assert "chi" in out["character_table_text"]


def test_homs_command_matches_example():
    out = json.loads(run_cli("homs", str(corpus_dir() / "c2.json"),
                             str(corpus_dir() / "s3.json")).stdout)
    check_schema(out, load_schema("homs"))
    assert len(out["classes"]) == 2
    inj = json.loads(run_cli("homs", "c2", "s3", "--injective").stdout)
    assert len(inj["classes"]) == 1


def test_bundles_command():
    out = json.loads(run_cli("bundles", "c3").stdout)
    check_schema(out, load_schema("bundles"))
    assert out["framing_count"] == 2


def test_stable_maps_command():
    out = json.loads(run_cli("stable-maps", "c2", "c2", "--variant", "orb").stdout)
    check_schema(out, load_schema("stable-maps"))
    assert out["rank"] == 5


def test_rstar_commands():
    hom = json.loads(
        run_cli("rstar", "--max-order", "2", "--max-dim", "3", "--homology").stdout
    )
    check_schema(hom, load_schema("rstar-homology"))
    assert hom["homology"][0]["betti"] == 1
    assert all(d["betti"] == 0 for d in hom["homology"][1:3])
    cen = json.loads(
        run_cli("rstar", "--max-order", "3", "--max-dim", "2", "--census").stdout
    )
    check_schema(cen, load_schema("rstar-census"))
    assert [c["count"] for c in cen["cells"]] == [3, 2, 0]


def test_localize_command(tmp_path):
    data = {
        "objects": ["a", "b"],
        "arrows": [
            {"name": "ia", "src": "a", "dst": "a"},
            {"name": "ib", "src": "b", "dst": "b"},
            {"name": "w", "src": "a", "dst": "b"},
        ],
        "compose": [
            ["ia", "ia", "ia"], ["ib", "ib", "ib"],
            ["ia", "w", "w"], ["w", "ib", "w"],
        ],
        "W": ["ia", "ib", "w"],
    }
    f = tmp_path / "cat.json"
    f.write_text(json.dumps(data))
    out = json.loads(run_cli("localize", str(f), "--from", "b", "--to", "a").stdout)
    check_schema(out, load_schema("localize"))
    assert out["rms_ok"] and out["count"] == 1


def test_detect_command():
    out = json.loads(run_cli("detect", "c2", "--char-index", "0").stdout)
    check_schema(out, load_schema("detect"))
    assert out["verdict"] == "nonzero_certified"
    assert out["degree"] == -1


def test_detect_matrix_file(tmp_path):
    f = tmp_path / "rep.json"
    f.write_text(json.dumps({
        "mode": "exact",
        "matrices": [[[1]], [[-1]]],
    }))
    out = json.loads(run_cli("detect", "c2", "--matrix-file", str(f)).stdout)
    assert out["verdict"] == "nonzero_certified"


def test_corpus_command():
    out = json.loads(run_cli("corpus").stdout)
    check_schema(out, load_schema("corpus"))
    assert any(g["name"] == "s4" and g["order"] == 24 for g in out["groups"])
    dumped = json.loads(run_cli("corpus", "--dump", "trivial").stdout)
    assert dumped["order"] == 1


def test_usage_error_exits_2():
    run_cli("stable-maps", "c2", "c2", "--variant", "nope", expect=2)
    run_cli(expect=2)


def test_domain_error_exits_1():
    proc = run_cli("group", "definitely-not-a-group", expect=1)
    err = json.loads(proc.stderr)
    assert err["error"] == "ValidationError"


def test_help_exits_zero():
    proc = run_cli("group", "--help")
    assert "usage" in proc.stdout


def test_out_and_manifest(tmp_path):
    out_path = tmp_path / "res.json"
    man_path = tmp_path / "man.json"
    run_cli("irreps", "c4", "--out", str(out_path), "--manifest", str(man_path))
    payload = json.loads(out_path.read_text())
    manifest = json.loads(man_path.read_text())
    check_schema(manifest, load_schema("manifest"))
    import hashlib

    assert manifest["output_sha256"] == hashlib.sha256(
        out_path.read_bytes()
    ).hexdigest()
    assert manifest["command"] == "irreps"


def test_determinism_twice():
    cmds = [
        ("group", "d8"),
        ("irreps", "c6"),
        ("homs", "c2", "s3"),
        ("stable-maps", "s3", "c2", "--variant", "rep"),
        ("rstar", "--max-order", "4", "--max-dim", "3", "--homology"),
        ("detect", "s3", "--char-index", "2"),
        ("corpus",),
    ]
    for cmd in cmds:
        a = run_cli(*cmd).stdout
        b = run_cli(*cmd).stdout
        assert a == b
