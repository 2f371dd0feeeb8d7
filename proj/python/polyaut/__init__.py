"""Polynomial automorphisms of finite groups, plus the rank-2/3 free
metabelian engine. Thin wrapper over the C++ extension."""

import json as _json

try:
    # installed layout: the extension lives inside the package
    from ._polyaut import (  # type: ignore[attr-defined]  # noqa: F401
        FmElement,
        Group,
        PolyautError,
        __version__,
        catalog_names,
        claim_ids,
        closure_size,
        fm_from_json,
        parse_word,
    )
    from ._polyaut import analyze_json as _analyze_json
    from ._polyaut import chain_json as _chain_json
    from ._polyaut import ia2poly_json as _ia2poly_json
    from ._polyaut import rank3_json as _rank3_json
    from ._polyaut import verify_json as _verify_json
except ImportError:
    # build-tree layout: the extension sits next to the package on PYTHONPATH
    from _polyaut import (  # noqa: F401
        FmElement,
        Group,
        PolyautError,
        __version__,
        catalog_names,
        claim_ids,
        closure_size,
        fm_from_json,
        parse_word,
    )
    from _polyaut import analyze_json as _analyze_json
    from _polyaut import chain_json as _chain_json
    from _polyaut import ia2poly_json as _ia2poly_json
    from _polyaut import rank3_json as _rank3_json
    from _polyaut import verify_json as _verify_json


def analyze(group, seed=12345, closure_budget=400000):
    """|A(G)|, |I(G)|, |P0(G)|, |P(G)| and series data as a dict."""
    return _json.loads(_analyze_json(group, seed, closure_budget))


def verify(group, claim, seed=12345, closure_budget=400000):
    """Run one claim checker; returns the report dict."""
    return _json.loads(_verify_json(group, claim, seed, closure_budget))


def check_chain(group, seed=12345, closure_budget=400000):
    """Verify Inn(G) <| P(G) <| Aut(G), P0 normal subset, P0 = P."""
    return _json.loads(_chain_json(group, seed, closure_budget))


def ia2poly(v_word, w_word):
    """Convert the IA-automorphism f(a)=a*v, f(b)=b*w to polynomial form."""
    return _json.loads(_ia2poly_json(v_word, w_word))


def rank3_counterexample():
    """The rank-3 IA-automorphism that is not polynomial."""
    return _json.loads(_rank3_json())
