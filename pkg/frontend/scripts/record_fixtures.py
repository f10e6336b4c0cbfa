"""Record service transcripts used by the client's contract tests.

Each fixture freezes the exact JSON the service produced for one game:
the creation payload, every move request/response pair, and the
analysis payloads the client would fetch along the way.  Regenerate
after changing the service:

    python3 frontend/scripts/record_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from indidom.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

K13_LEAF_FIRST = {"edges": "4 3\n0 3\n1 3\n2 3\n"}


def record(client, name, graph, role, pick_move):
    create_request = {"graph": graph, "human_role": role}
    created = client.post("/sessions", json=create_request)
    assert created.status_code == 201, created.text
    state = created.json()
    sid = state["id"]
    steps = []
    while not state["terminal"]:
        analysis = client.get(f"/sessions/{sid}/analysis").json()
        vertex = pick_move(state, analysis)
        response = client.post(f"/sessions/{sid}/moves", json={"vertex": vertex})
        assert response.status_code == 200, response.text
        state = response.json()
        steps.append({"analysis": analysis,
                      "request": {"vertex": vertex},
                      "response": state})
    fixture = {
        "name": name,
        "create": {"request": create_request, "response": created.json()},
        "steps": steps,
        "final_analysis": client.get(f"/sessions/{sid}/analysis").json(),
    }
    path = FIXTURES / f"{name}.json"
    path.write_text(json.dumps(fixture, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path.name} ({len(steps)} moves, final length {state['length']})")
    return state


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    final = record(client, "k13-staller-leaf", K13_LEAF_FIRST, "staller",
                   lambda state, analysis: state["pending_indication"])
    assert final["length"] == 3, final

    final = record(client, "k13-staller-center", K13_LEAF_FIRST, "staller",
                   lambda state, analysis: 3)
    assert final["length"] == 1, final

    final = record(client, "grid3x3-dominator", {"family": "grid:3,3"},
                   "dominator", lambda state, analysis: analysis["optimal_moves"][0])
    assert final["length"] == 5, final

    created = client.post("/sessions", json={"graph": {"family": "path:5"},
                                             "human_role": "dominator"})
    assert created.status_code == 201, created.text
    state = created.json()
    analysis = client.get(f"/sessions/{state['id']}/analysis").json()
    assert analysis["value"] == 3, analysis
    path = FIXTURES / "path5-initial.json"
    path.write_text(json.dumps({"name": "path5-initial",
                                "create": {"request": {"graph": {"family": "path:5"},
                                                       "human_role": "dominator"},
                                           "response": state},
                                "analysis": analysis},
                               indent=2, sort_keys=True) + "\n")
    print(f"wrote {path.name} (analysis only)")


if __name__ == "__main__":
    main()
