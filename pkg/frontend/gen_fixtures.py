"""Regenerate the frontend test fixtures from the real engine.

The fixtures are byte-for-byte responses of the HTTP API, so the frontend
tests exercise exactly the wire formats the service produces.

Run from the repository root:  python frontend/gen_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from qmut import example_five_vertex, quiver_to_document
from qmut.service import create_app

OUT = Path(__file__).parent / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    (OUT / name).write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {OUT / name}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    five = quiver_to_document(example_five_vertex())
    dump("five_vertex.json", five)

    resp = client.post("/api/mutate", json={"quiver": five, "vertex": "B"})
    resp.raise_for_status()
    dump("five_vertex_mu_b.json", resp.json())

    alpha3 = {
        "vertices": [
            {"id": "A", "frozen": True},
            {"id": "B", "frozen": True},
            {"id": "C", "frozen": False},
            {"id": "D", "frozen": False},
        ],
        "arrows": [
            {"from": "A", "to": "C", "weight": "1"},
            {"from": "C", "to": "D", "weight": "3"},
            {"from": "D", "to": "B", "weight": "1"},
        ],
    }
    resp = client.post(
        "/api/dynamics", json={"quiver": alpha3, "c": "C", "d": "D", "steps": 40}
    )
    resp.raise_for_status()
    dump("dynamics_alpha3.json", resp.json())

    resp = client.post(
        "/api/dynamics", json={"quiver": alpha3 | {
            "arrows": [
                {"from": "A", "to": "C", "weight": "1"},
                {"from": "C", "to": "D", "weight": "1"},
                {"from": "D", "to": "B", "weight": "1"},
            ]}, "c": "C", "d": "D", "steps": 15}
    )
    resp.raise_for_status()
    dump("dynamics_alpha1.json", resp.json())


if __name__ == "__main__":
    main()
