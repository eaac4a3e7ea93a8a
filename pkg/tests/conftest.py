"""Shared builders: catalog inputs are expensive enough to cache per session."""

from __future__ import annotations

import pytest

from cohint import catalog_emit, enumerate_strata
from cohint.integrality import bps_by_orbit

_STRATS: dict = {}
_BPS: dict = {}
_VERIFY: dict = {}


def build(key: str):
    """(document, stratification) for a catalog key, cached."""
    if key not in _STRATS:
        doc = catalog_emit(key)
        _STRATS[key] = (doc, enumerate_strata(doc.group_data(), doc.rep_data()))
    return _STRATS[key]


def bps_cache(key: str):
    if key not in _BPS:
        _BPS[key] = bps_by_orbit(build(key)[1])
    return _BPS[key]


def verify_all(key: str, degree: int = 8):
    """Cached (hilbert, isomorphism, associativity) ledgers for a catalog key."""
    from cohint.integrality import (
        verify_associativity,
        verify_hilbert,
        verify_isomorphism,
    )

    if (key, degree) not in _VERIFY:
        _, strat = build(key)
        cache = bps_cache(key)
        _VERIFY[(key, degree)] = (
            verify_hilbert(strat, degree, cache),
            verify_isomorphism(strat, degree, cache),
            verify_associativity(strat),
        )
    return _VERIFY[(key, degree)]


@pytest.fixture
def gl2_strat():
    return build("gl2-cotangent")[1]


@pytest.fixture
def torus_strat():
    return build("torus2-cotangent")[1]
