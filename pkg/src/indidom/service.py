"""HTTP/JSON service hosting interactive games against the exact engine.

One session is one game on one graph.  The human owns one role; the
engine answers the other half of every round synchronously inside the
same request, so a session is never left mid-round: after any mutation
the state either awaits the human's next half-round or is terminal.

Endpoints (all JSON):
    POST   /sessions                 {"graph": {...}, "human_role": "dominator"|"staller"}
    GET    /sessions/{id}            public state
    POST   /sessions/{id}/moves      {"vertex": v}
    GET    /sessions/{id}/analysis   {"value", "optimal_moves", "move_values"}
    DELETE /sessions/{id}

The graph object carries exactly one of "family" ("kind:p1,p2"), "g6"
(a graph6 line), or "edges" (edge-list text).  Sessions live in memory
with idle expiry; an optional persist path snapshots them to JSON after
every mutation and restores them on startup.

Exact analysis and engine replies are served for graphs up to the
analysis cap (default 18 vertices).  Beyond the cap the session still
plays, but the engine falls back to a documented greedy: as Dominator
it indicates the undominated vertex whose worst reply dominates the
most, as Staller it selects the neighbor that dominates the least, and
/analysis reports unavailability instead of values.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import families
from .engine import GameState, SolveLimits, Solver, apply_round, initial_state
from .families import FamilyError, FamilySpec
from .graphio import FormatError, parse_edge_list, parse_graph6
from .graphs import Graph, GraphError, iter_bits
from .layout import coordinates

DEFAULT_ANALYSIS_CAP = 18
DEFAULT_TTL_SECONDS = 3600.0

DOMINATOR = "dominator"
STALLER = "staller"


class GraphSpec(BaseModel):
    family: Optional[str] = None
    g6: Optional[str] = None
    edges: Optional[str] = None


class CreateSessionRequest(BaseModel):
    graph: GraphSpec
    human_role: str


class MoveRequest(BaseModel):
    vertex: int


def _build_graph(spec: GraphSpec) -> tuple[Graph, Optional[FamilySpec]]:
    given = [k for k in ("family", "g6", "edges") if getattr(spec, k) is not None]
    if len(given) != 1:
        raise HTTPException(400, "graph needs exactly one of family, g6, edges")
    try:
        if spec.family is not None:
            fam = FamilySpec.parse(spec.family)
            return families.generate_family(fam), fam
        if spec.g6 is not None:
            return parse_graph6(spec.g6.strip()), None
        return parse_edge_list(spec.edges), None
    except (FamilyError, FormatError, GraphError) as exc:
        raise HTTPException(400, str(exc)) from None


@dataclass
class Session:
    id: str
    graph: Graph
    family: Optional[FamilySpec]
    human_role: str
    layout: list[tuple[float, float]]
    analysis_enabled: bool
    state: GameState = None  # type: ignore[assignment]
    pending_indication: Optional[int] = None
    solver: Optional[Solver] = None
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_touch: float = field(default_factory=time.monotonic)

    def touch(self) -> None:
        self.last_touch = time.monotonic()


def _greedy_indication(state: GameState) -> int:
    g = state.graph
    und = g.full_mask & ~state.dominated_mask

    def worst_reply(u: int) -> int:
        return min((g.cn[v] & und).bit_count() for v in iter_bits(g.cn[u]))

    return max(iter_bits(und), key=lambda u: (worst_reply(u), -u))


def _greedy_selection(state: GameState, u: int) -> int:
    g = state.graph
    und = g.full_mask & ~state.dominated_mask
    return min(iter_bits(g.cn[u]), key=lambda v: ((g.cn[v] & und).bit_count(), v))


class SessionStore:
    """All live sessions plus expiry and optional JSON persistence."""

    def __init__(self, *, analysis_cap: int = DEFAULT_ANALYSIS_CAP,
                 ttl_seconds: float = DEFAULT_TTL_SECONDS,
                 persist_path: Optional[str] = None,
                 limits: Optional[SolveLimits] = None):
        self.analysis_cap = analysis_cap
        self.ttl = ttl_seconds
        self.persist_path = Path(persist_path) if persist_path else None
        self.limits = limits
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        if self.persist_path and self.persist_path.exists():
            self._restore()

    # -- lifecycle -----------------------------------------------------

    def create(self, graph: Graph, family: Optional[FamilySpec],
               human_role: str) -> Session:
        if human_role not in (DOMINATOR, STALLER):
            raise HTTPException(400, "human_role must be dominator or staller")
        session = Session(
            id=secrets.token_hex(8),
            graph=graph,
            family=family,
            human_role=human_role,
            layout=coordinates(graph, family),
            analysis_enabled=graph.n <= self.analysis_cap,
        )
        session.state = initial_state(graph)
        if session.analysis_enabled:
            session.solver = Solver(graph, self.limits)
        if human_role == STALLER and not session.state.is_terminal:
            session.pending_indication = self._engine_indication(session)
        with self._lock:
            self._expire_locked()
            self._sessions[session.id] = session
        self._persist()
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._expire_locked()
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, "no such session")
        session.touch()
        return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise HTTPException(404, "no such session")
            del self._sessions[session_id]
        self._persist()

    def _expire_locked(self) -> None:
        now = time.monotonic()
        dead = [sid for sid, s in self._sessions.items()
                if now - s.last_touch > self.ttl]
        for sid in dead:
            del self._sessions[sid]

    # -- engine halves -------------------------------------------------

    def _engine_indication(self, session: Session) -> int:
        if session.solver is not None:
            return session.solver.best_indication(session.state.dominated_mask)[0]
        return _greedy_indication(session.state)

    def _engine_selection(self, session: Session, u: int) -> int:
        if session.solver is not None:
            return session.solver.best_selection(session.state.dominated_mask, u)[0]
        return _greedy_selection(session.state, u)

    # -- moves ---------------------------------------------------------

    def submit_move(self, session: Session, vertex: int) -> None:
        with session.lock:
            state = session.state
            if state.is_terminal:
                raise HTTPException(409, "the game is over")
            g = state.graph
            if session.human_role == DOMINATOR:
                if not 0 <= vertex < g.n:
                    raise HTTPException(400, f"vertex {vertex} out of range")
                if state.dominated_mask >> vertex & 1:
                    raise HTTPException(400, "vertex already dominated")
                reply = self._engine_selection(session, vertex)
                session.state = apply_round(state, vertex, reply)
            else:
                u = session.pending_indication
                if u is None:
                    raise HTTPException(409, "no indication is pending")
                if not 0 <= vertex < g.n or not g.cn[u] >> vertex & 1:
                    raise HTTPException(400, "not in closed neighborhood")
                session.state = apply_round(state, u, vertex)
                session.pending_indication = None
                if not session.state.is_terminal:
                    session.pending_indication = self._engine_indication(session)
            session.touch()
        self._persist()

    # -- analysis ------------------------------------------------------

    def analysis(self, session: Session) -> dict:
        with session.lock:
            if not session.analysis_enabled or session.solver is None:
                return {"available": False, "reason": "graph above analysis cap",
                        "value": None, "optimal_moves": [], "move_values": {}}
            solver = session.solver
            state = session.state
            value = solver.value(state.dominated_mask)
            if state.is_terminal:
                return {"available": True, "value": 0,
                        "optimal_moves": [], "move_values": {}}
            move_values: dict[str, int] = {}
            if session.human_role == DOMINATOR:
                for u in iter_bits(state.graph.full_mask & ~state.dominated_mask):
                    move_values[str(u)] = solver.indication_value(state.dominated_mask, u)
                best = min(move_values.values())
            else:
                u = session.pending_indication
                assert u is not None
                for v in iter_bits(state.graph.cn[u]):
                    move_values[str(v)] = 1 + solver.value(
                        state.dominated_mask | state.graph.cn[v])
                best = max(move_values.values())
            optimal = [int(k) for k, val in move_values.items() if val == best]
            return {"available": True, "value": value,
                    "optimal_moves": sorted(optimal), "move_values": move_values}

    # -- persistence ---------------------------------------------------

    def _persist(self) -> None:
        if self.persist_path is None:
            return
        with self._lock:
            payload = {
                "sessions": [
                    {
                        "id": s.id,
                        "n": s.graph.n,
                        "edges": s.graph.edges(),
                        "family": str(s.family) if s.family else None,
                        "human_role": s.human_role,
                        "history": [list(r) for r in s.state.history],
                        "pending_indication": s.pending_indication,
                    }
                    for s in self._sessions.values()
                ]
            }
        tmp = self.persist_path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload))
        tmp.replace(self.persist_path)

    def _restore(self) -> None:
        from .graphs import build_graph

        payload = json.loads(self.persist_path.read_text())
        for item in payload.get("sessions", []):
            graph = build_graph(item["n"], [tuple(e) for e in item["edges"]])
            family = FamilySpec.parse(item["family"]) if item.get("family") else None
            session = Session(
                id=item["id"],
                graph=graph,
                family=family,
                human_role=item["human_role"],
                layout=coordinates(graph, family),
                analysis_enabled=graph.n <= self.analysis_cap,
            )
            session.state = GameState(graph, tuple(tuple(r) for r in item["history"]))
            if session.analysis_enabled:
                session.solver = Solver(graph, self.limits)
            session.pending_indication = item.get("pending_indication")
            self._sessions[session.id] = session


def public_state(session: Session) -> dict:
    state = session.state
    g = state.graph
    if state.is_terminal:
        legal: list[int] = []
    elif session.human_role == DOMINATOR:
        legal = list(iter_bits(g.full_mask & ~state.dominated_mask))
    elif session.pending_indication is not None:
        legal = list(iter_bits(g.cn[session.pending_indication]))
    else:
        legal = []
    return {
        "id": session.id,
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "layout": [list(p) for p in session.layout],
        "family": str(session.family) if session.family else None,
        "human_role": session.human_role,
        "dominated": list(state.dominated),
        "history": [list(r) for r in state.history],
        "length": state.length,
        "terminal": state.is_terminal,
        "pending_indication": session.pending_indication,
        "legal_moves": legal,
        "analysis_available": session.analysis_enabled,
    }


def create_app(*, analysis_cap: int = DEFAULT_ANALYSIS_CAP,
               ttl_seconds: float = DEFAULT_TTL_SECONDS,
               persist_path: Optional[str] = None,
               limits: Optional[SolveLimits] = None) -> FastAPI:
    store = SessionStore(analysis_cap=analysis_cap, ttl_seconds=ttl_seconds,
                         persist_path=persist_path, limits=limits)
    app = FastAPI(title="indidom", docs_url=None, redoc_url=None)
    app.state.store = store
    # The browser client may be served from another port; sessions are
    # unauthenticated, so permissive CORS gives up nothing.
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateSessionRequest) -> dict:
        graph, family = _build_graph(req.graph)
        session = store.create(graph, family, req.human_role)
        return public_state(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return public_state(store.get(session_id))

    @app.post("/sessions/{session_id}/moves")
    def submit_move(session_id: str, req: MoveRequest) -> dict:
        session = store.get(session_id)
        store.submit_move(session, req.vertex)
        return public_state(session)

    @app.get("/sessions/{session_id}/analysis")
    def analysis(session_id: str) -> dict:
        return store.analysis(store.get(session_id))

    @app.delete("/sessions/{session_id}", status_code=204)
    def delete_session(session_id: str) -> None:
        store.delete(session_id)

    return app
