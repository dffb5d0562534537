import numpy as np
import pytest

from conftest import haar_state
from qcoords.coords import (
    build_coordinate_set,
    from_json,
    three_coordinates,
    to_json,
    two_coordinates,
)
from qcoords.core import fidelity, make_state
from qcoords.errors import ParseError, SchemaError
from qcoords.gsd3 import assemble3
from qcoords.ketparse import parse_state_spec
from qcoords.schmidt2 import assemble2

GOLDEN_GHZ = """{
  "schema_version": 1,
  "num_qubits": 3,
  "bloch": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
  "frames": [[0, 0], [0, 0], [0, 0]],
  "lambda": [0.70710678118654757, 0, 0, 0, 0.70710678118654757],
  "alpha": [0, 0, 0, 0],
  "concurrences": {"c12": [0, 0], "c13": [0, 0], "c23": [0, 0], "c123": [1.0000000000000002, 0]},
  "gauge_notes": []
}"""


def test_build_ghz_payload():
    cs = build_coordinate_set(parse_state_spec("ghz"))
    assert max(b.norm() for b in cs.bloch) <= 1e-10
    assert abs(cs.three_q.c123 - 1.0) <= 1e-10
    assert max(abs(cs.three_q.c12), abs(cs.three_q.c13), abs(cs.three_q.c23)) <= 1e-10


def test_build_product_payload():
    cs = build_coordinate_set(parse_state_spec("product2"))
    assert np.allclose((cs.bloch[0].x, cs.bloch[0].y, cs.bloch[0].z), (1, 0, 0), atol=1e-10)
    assert np.allclose((cs.bloch[1].x, cs.bloch[1].y, cs.bloch[1].z), (0, 0, 1), atol=1e-10)
    assert abs(cs.two_q.concurrence) <= 1e-12


def test_build_single_qubit_payload():
    cs = build_coordinate_set(parse_state_spec("plus"))
    assert cs.num_qubits == 1
    assert cs.two_q is None and cs.three_q is None


def test_payload_field_consistency_random(rng):
    for n in (2, 3):
        for _ in range(25):
            psi = haar_state(rng, n)
            cs = build_coordinate_set(psi)
            if n == 2:
                rebuilt = assemble2(two_coordinates(cs))
            else:
                rebuilt = assemble3(three_coordinates(cs))
            assert fidelity(rebuilt, psi) >= 1 - 1e-8
            again = build_coordinate_set(rebuilt)
            for b0, b1 in zip(cs.bloch, again.bloch):
                assert abs(b0.x - b1.x) <= 1e-8
                assert abs(b0.y - b1.y) <= 1e-8
                assert abs(b0.z - b1.z) <= 1e-8


def test_golden_round_trip():
    assert to_json(from_json(GOLDEN_GHZ)) == GOLDEN_GHZ
    assert to_json(build_coordinate_set(parse_state_spec("ghz"))) == GOLDEN_GHZ


def test_json_round_trip_bit_identical(rng):
    for n in (1, 2, 3):
        for _ in range(20):
            psi = haar_state(rng, n)
            doc = to_json(build_coordinate_set(psi))
            assert to_json(from_json(doc)) == doc


def test_truncated_document_is_parse_error():
    doc = to_json(build_coordinate_set(parse_state_spec("ghz")))
    with pytest.raises(ParseError) as err:
        from_json(doc[: len(doc) // 2])
    assert err.value.line is not None and err.value.column is not None


def test_schema_errors_name_the_field():
    doc = to_json(build_coordinate_set(parse_state_spec("bell")))
    broken = doc.replace('"frames"', '"framez"')
    with pytest.raises(SchemaError) as err:
        from_json(broken)
    assert err.value.field == "frames"

    import json

    obj = json.loads(doc)
    obj["concurrences"]["c"] = [1.0, 0.0]  # inconsistent with lambda/alpha
    obj["lambda"] = [1.0, 0.0]
    obj["alpha"] = [0.0]
    with pytest.raises(SchemaError) as err:
        from_json(json.dumps(obj))
    assert "c" in str(err.value.field)


def test_mixed_blocks_rejected():
    doc = to_json(build_coordinate_set(parse_state_spec("bell")))
    import json

    obj = json.loads(doc)
    obj["num_qubits"] = 3
    with pytest.raises(SchemaError):
        from_json(json.dumps(obj))


def test_one_qubit_round_trip():
    cs = build_coordinate_set(make_state([0.6, 0.8j], 1))
    doc = to_json(cs)
    assert to_json(from_json(doc)) == doc
