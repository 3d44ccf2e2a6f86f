import json

from core.config import DEFAULTS, PROJECT_ROOT, _deep_merge, load_config


def test_deep_merge():
    merged = _deep_merge({"a": 1, "b": {"c": 2, "d": 3}}, {"b": {"c": 5}, "e": 6})
    assert merged == {"a": 1, "b": {"c": 5, "d": 3}, "e": 6}


def test_defaults_without_files(tmp_path, clean_env):
    cfg = load_config(tmp_path)
    assert cfg["family"] == [0, 1, 2]
    assert cfg["log_level"] == "WARNING"
    assert cfg["counterexample_limit"] == 32
    assert cfg["grids"] == {"K": 5, "M": 5, "N": 16}
    assert cfg["reports"]["save"] is False
    assert cfg["reports"]["dir"] == str(tmp_path.resolve() / "reports")
    assert cfg["config_dir"] == str(tmp_path.resolve())
    assert DEFAULTS["reports"]["dir"] == "reports"


def test_config_json_overrides(tmp_path, clean_env):
    (tmp_path / "config.json").write_text(
        json.dumps({"family": [0, 1], "grids": {"K": 3}, "counterexample_limit": 4}),
        encoding="utf-8",
    )
    cfg = load_config(tmp_path)
    assert cfg["family"] == [0, 1]
    assert cfg["grids"] == {"K": 3, "M": 5, "N": 16}
    assert cfg["counterexample_limit"] == 4


def test_broken_config_json_falls_back(tmp_path, clean_env):
    (tmp_path / "config.json").write_text("{not json", encoding="utf-8")
    assert load_config(tmp_path)["family"] == [0, 1, 2]


def test_env_overrides(tmp_path, clean_env):
    clean_env.setenv("BICYCLIC_LOG_LEVEL", "debug")
    clean_env.setenv("BICYCLIC_REPORTS_DIR", str(tmp_path / "out"))
    clean_env.setenv("BICYCLIC_SAVE_REPORTS", "yes")
    cfg = load_config(tmp_path)
    assert cfg["log_level"] == "DEBUG"
    assert cfg["reports"]["dir"] == str(tmp_path / "out")
    assert cfg["reports"]["save"] is True


def test_dotenv_in_config_dir(tmp_path, clean_env):
    (tmp_path / ".env").write_text("BICYCLIC_SAVE_REPORTS=1\n", encoding="utf-8")
    assert load_config(tmp_path)["reports"]["save"] is True


def test_suites_file_falls_back_to_project_root(tmp_path, clean_env):
    cfg = load_config(tmp_path)
    assert cfg["suites_file"] == str(PROJECT_ROOT / "suites.yaml")
    (tmp_path / "suites.yaml").write_text("core: {}\n", encoding="utf-8")
    assert load_config(tmp_path)["suites_file"] == str(tmp_path.resolve() / "suites.yaml")


def test_loads_do_not_leak_into_defaults(tmp_path, clean_env):
    first, second = tmp_path / "a", tmp_path / "b"
    first.mkdir()
    second.mkdir()
    clean_env.setenv("BICYCLIC_SAVE_REPORTS", "yes")
    assert load_config(first)["reports"]["save"] is True
    clean_env.delenv("BICYCLIC_SAVE_REPORTS")

    cfg = load_config(second)
    assert cfg["reports"] == {"save": False, "dir": str(second.resolve() / "reports")}
    assert DEFAULTS["reports"] == {"save": False, "dir": "reports"}
