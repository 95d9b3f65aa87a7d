from rainbowtri.settings import get_settings, load_settings


def test_defaults_from_repository_config():
    settings = get_settings()
    assert settings.exhaustive.colored_cap == 4
    assert settings.oriented_cap() == 5
    assert settings.oriented_cap(allow_large=True) == 6
    assert settings.harness.max_counterexamples == 25


def test_missing_file_falls_back_to_defaults(tmp_path):
    settings = load_settings(tmp_path / "absent.yaml")
    assert settings.random.samples == 10_000
    assert settings.harness.workers == 0
    assert settings.harness.worker_count() >= 1
    assert settings.graph_files.max_vertices == 100_000


def test_yaml_values_are_read(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("rainbowtri:\n  exhaustive:\n    colored_cap: 3\n  harness:\n    workers: 4\n")
    settings = load_settings(path)
    assert settings.exhaustive.colored_cap == 3
    assert settings.exhaustive.oriented_cap == 5
    assert settings.harness.workers == 4


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("RAINBOWTRI_EXHAUSTIVE_CAP", "7")
    monkeypatch.setenv("RAINBOWTRI_WORKERS", "3")
    monkeypatch.setenv("RAINBOWTRI_LOG_LEVEL", "debug")
    settings = load_settings(tmp_path / "absent.yaml")
    assert settings.exhaustive.colored_cap == 7
    assert settings.oriented_cap(allow_large=True) == 7
    assert settings.harness.workers == 3
    assert settings.log_level == "DEBUG"


def test_env_cap_never_lowers_limits(monkeypatch, tmp_path):
    monkeypatch.setenv("RAINBOWTRI_EXHAUSTIVE_CAP", "2")
    settings = load_settings(tmp_path / "absent.yaml")
    assert settings.exhaustive.colored_cap == 4


def test_bad_env_value_is_ignored(monkeypatch, tmp_path):
    monkeypatch.setenv("RAINBOWTRI_EXHAUSTIVE_CAP", "many")
    assert load_settings(tmp_path / "absent.yaml").exhaustive.oriented_cap == 5


def test_settings_path_from_environment(monkeypatch, tmp_path):
    path = tmp_path / "alt.yaml"
    path.write_text("rainbowtri:\n  random:\n    seed: 42\n")
    monkeypatch.setenv("RAINBOWTRI_SETTINGS", str(path))
    assert get_settings().random.seed == 42


def test_explicit_worker_count_is_kept(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("rainbowtri:\n  harness:\n    workers: 2\n")
    assert load_settings(path).harness.worker_count() == 2


def test_zero_workers_means_one_per_cpu(monkeypatch, tmp_path):
    monkeypatch.setattr("os.cpu_count", lambda: 6)
    assert load_settings(tmp_path / "absent.yaml").harness.worker_count() == 6
