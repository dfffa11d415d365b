import pytest

from graphcomplex.config import ConfigError, default_cache_dir, read_config_file, resolve


def test_precedence(tmp_path):
    conf = tmp_path / "gc.conf"
    conf.write_text("# settings\nseed = 5\njobs = 3\ntrials = 7\n")
    env = {"GC_SEED": "11", "GC_JOBS": "4"}
    s = resolve({"seed": 99, "jobs": None, "cache_dir": None}, env, conf)
    assert s["seed"] == "99"  # flag beats env
    assert s["jobs"] == "4"  # env beats file
    assert s["trials"] == "7"  # file beats default
    s = resolve({}, {}, None)
    assert s["seed"] == "0" and s["trials"] == "10"


def test_config_from_environment_path(tmp_path):
    conf = tmp_path / "other.conf"
    conf.write_text("seed=3\n")
    assert resolve({}, {"GC_CONFIG": str(conf)})["seed"] == "3"


def test_unknown_key_and_malformed_line(tmp_path):
    conf = tmp_path / "gc.conf"
    conf.write_text("colour = blue\n")
    with pytest.raises(ConfigError, match="unknown key"):
        read_config_file(conf)
    conf.write_text("seed\n")
    with pytest.raises(ConfigError, match="key=value"):
        read_config_file(conf)
    conf.write_text('cache-dir = "/tmp/x"\n')
    assert read_config_file(conf) == {"cache_dir": "/tmp/x"}


def test_cache_dir(tmp_path, monkeypatch):
    assert resolve({}, {"GC_CACHE_DIR": str(tmp_path)})["cache_dir"] == str(tmp_path)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
    assert default_cache_dir() == tmp_path / "xdg" / "graphcomplex"
    assert resolve({}, {})["cache_dir"] == str(tmp_path / "xdg" / "graphcomplex")
