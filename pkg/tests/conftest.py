"""Shared fixtures: the configuration and one full certificate per session."""

import pytest

from h4geproci import geproci
from h4geproci.config import build_h4


@pytest.fixture(scope="session")
def cfg():
    return build_h4()


@pytest.fixture(scope="session")
def geproci_cert_seed1(cfg):
    return geproci.verify_geproci(cfg, 1)
