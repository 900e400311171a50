import pathlib
import sys

import pytest
import yaml

ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from tiedlinks.config import DEFAULTS, load_config
from tiedlinks.errors import ValidationError
from tiedlinks.validators import (
    SchemaRegistry,
    assert_config,
    assert_job,
    lint_config,
    lint_job,
    validate_jobs_dir,
)


def _batch(**job):
    return {"version": "1.0.0", "jobs": [{"id": "j1", **job}]}


def test_shipped_config_is_valid():
    data = yaml.safe_load((ROOT / "config" / "tiedlinks.yaml").read_text(encoding="utf-8"))
    assert lint_config(data) == []
    assert_config(data)


def test_config_rejects_unknown_and_out_of_range_keys():
    problems = lint_config({"trails": 5, "max_n": 9})
    pointers = [p for p, _ in problems]
    assert "(root)" in pointers and "max_n" in pointers
    with pytest.raises(ValidationError):
        assert_config({"tie_probability": 1.5})


def test_load_config_layers(tmp_path, monkeypatch):
    monkeypatch.delenv("TIEDLINKS_CONFIG", raising=False)
    assert load_config() == DEFAULTS
    path = tmp_path / "cfg.yaml"
    path.write_text("trials: 7\nhomflypt_renaming:\n  V: { t: \"r/v\" }\n", encoding="utf-8")
    cfg = load_config(str(path), seed=9, max_n=None)
    assert cfg["trials"] == 7 and cfg["seed"] == 9
    assert cfg["max_n"] == DEFAULTS["max_n"]
    assert cfg["homflypt_renaming"]["V"] == {"q": "v^2", "t": "r/v"}
    monkeypatch.setenv("TIEDLINKS_CONFIG", str(path))
    assert load_config()["trials"] == 7


def test_load_config_validates(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("max_len: 0\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_config(str(path))


def test_job_schema_accepts_each_command():
    ok = [
        _batch(command="eval", word="n=1"),
        _batch(command="components", braid="trefoil.braid"),
        _batch(command="compare", singular_pair=["n=2; s1 s1 s1", "n=1"]),
        _batch(command="check", harness="markov", trials=3),
        _batch(command="selftest", max_n=3),
    ]
    for batch in ok:
        assert lint_job(batch) == [], batch


def test_job_schema_conditional_requirements():
    assert lint_job(_batch(command="check"))
    assert lint_job(_batch(command="eval"))
    assert lint_job(_batch(command="compare", word="n=1"))
    assert lint_job(_batch(command="eval", word="n=1", subst="z=1"))
    with pytest.raises(ValidationError):
        assert_job({"jobs": []})


def test_job_defaults_are_injected_on_request():
    batch = _batch(command="eval", word="n=1")
    lint_job(batch, apply_defaults=True)
    assert batch["jobs"][0]["oracle"] is False


def test_shipped_job_batches_validate():
    report = validate_jobs_dir(str(ROOT / "jobs"))
    assert report.total >= 2
    assert report.invalid == 0, [f for f in report.files if not f["valid"]]


def test_registry_reports_missing_schema(tmp_path):
    with pytest.raises(FileNotFoundError):
        SchemaRegistry(str(tmp_path)).get("job.schema.yaml")
