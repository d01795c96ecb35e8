import json
from fractions import Fraction

import numpy as np
import pytest

from symgen import reports


def test_tagging():
    assert reports.tag(3) == {"kind": "exact-decimal", "value": "3"}
    assert reports.tag(Fraction(1, 7)) == {"kind": "exact-decimal", "value": "1/7"}
    assert reports.tag(Fraction(4, 2)) == {"kind": "exact-decimal", "value": "2"}
    assert reports.tag(0.5) == {"kind": "float64", "value": 0.5}
    assert reports.tag(True) is True and reports.tag("x") == "x" and reports.tag(None) is None
    assert reports.tag(np.int64(5)) == {"kind": "exact-decimal", "value": "5"}
    assert reports.tag(float("nan")) == {"kind": "float64", "value": None}
    big = 10**40 + 1
    assert reports.tag(big)["value"] == str(big)
    with pytest.raises(TypeError):
        reports.tag(object())


def test_dumps_has_no_bare_numbers():
    def walk(x):
        if isinstance(x, dict):
            if set(x) == {"kind", "value"}:
                return
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert not isinstance(x, (int, float)) or isinstance(x, bool)

    walk(json.loads(reports.dumps({"a": [1, 2.0, Fraction(1, 3)], "b": {"c": 4}})))


def test_payload_hash_ignores_volatile_keys():
    r = {"results": {"x": 1}, "runtime_ms": 3.0}
    s = dict(r, runtime_ms=99.0)
    assert reports.payload_sha256(r) == reports.payload_sha256(s)
    m = reports.manifest("estimate", {"n": 5}, 1, ["out.json"])
    assert set(m) == {"subcommand", "config", "seed", "tool_version", "timestamp", "outputs"}
    out = reports.with_manifest(r, m)
    assert out["payload_sha256"] == reports.payload_sha256(r)
    assert reports.payload(out) == reports.payload(r)
