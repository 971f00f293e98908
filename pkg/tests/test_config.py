import pytest
from pydantic import ValidationError

from src.config import Settings


def test_defaults():
    s = Settings()
    assert s.exhaustive_max_n <= s.oracle_max_n
    assert s.submodular_samples == 10_000


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HOMODEC_THREADS", "4")
    monkeypatch.setenv("HOMODEC_EXHAUSTIVE_MAX_N", "9")
    monkeypatch.setenv("PORT", "9100")
    s = Settings()
    assert (s.threads, s.exhaustive_max_n, s.port) == (4, 9, 9100)


def test_thread_count_must_be_positive(monkeypatch):
    monkeypatch.setenv("HOMODEC_THREADS", "0")
    with pytest.raises(ValidationError):
        Settings()
