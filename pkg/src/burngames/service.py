"""Turn-based HTTP service for interactive liminal burning games.

A session pits a human (as arsonist or saboteur) against the engine, or
lets the engine play both sides in spectator mode.  Sessions are
persisted as append-only JSON-lines move logs keyed by id; in-memory
state is always derivable by replaying the log, which is the test
surface for replay soundness.  Engine replies are computed synchronously
with the exact minimax for small boards and a documented greedy
heuristic (flagged non-certified) above the exact limit.

State schema served to clients:

    {round, phase, burned: [...], revealed: [...], terminal,
     rounds_total?, to_move, reveal_quota, ...}

plus coordinate decorations for strongpath d=2 specs and the exact
burning/cooling sandwich when the board is small enough to solve.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .engine import spread
from .errors import BudgetExceededError, GraphError, InvalidMoveError
from .graphs import Graph, bits, mask_of, parse_graph_spec
from .solvers import LiminalSolver, burning_number, cooling_number

PHASE_REVEAL = "saboteur_reveal"
PHASE_BURN = "arsonist_burn"

BOUNDS_VERTEX_LIMIT = 16


class Session:
    """State machine for one liminal game."""

    def __init__(
        self,
        session_id: str,
        g: Graph,
        k: int,
        role: str,
        reveal_burned: bool,
        exact_limit: int,
    ):
        if k < 1:
            raise InvalidMoveError("k must be >= 1")
        if role not in ("arsonist", "saboteur", "spectator"):
            raise InvalidMoveError(f"unknown role {role!r}")
        self.id = session_id
        self.g = g
        self.k = k
        self.role = role
        self.reveal_burned = reveal_burned
        self.engine_mode = "exact" if g.n <= exact_limit else "heuristic"
        self.burned = 0
        self.revealed = 0
        self.round = 1
        self.phase = PHASE_REVEAL
        self.terminal = False
        self.rounds_total: int | None = None
        self.history: list[dict] = []
        self._solver: LiminalSolver | None = None
        self.bounds: dict[str, int] | None = None
        if g.n <= BOUNDS_VERTEX_LIMIT:
            self.bounds = {
                "burning": burning_number(g).value,
                "cooling": cooling_number(g).value,
            }

    # -- turn bookkeeping ---------------------------------------------

    @property
    def side_to_move(self) -> str:
        return "saboteur" if self.phase == PHASE_REVEAL else "arsonist"

    @property
    def to_move(self) -> str | None:
        if self.terminal:
            return None
        return "human" if self.role == self.side_to_move else "engine"

    @property
    def reveal_quota(self) -> int:
        unrevealed = self.g.full_mask & ~self.revealed
        return min(self.k, unrevealed.bit_count())

    def solver(self) -> LiminalSolver:
        if self._solver is None:
            self._solver = LiminalSolver(
                self.g, self.k, reveal_burned=self.reveal_burned, max_vertices=self.g.n
            )
        return self._solver

    # -- move application ----------------------------------------------

    def apply(self, actor: str, move: dict) -> None:
        """Apply one validated move; raises InvalidMoveError otherwise."""
        if self.terminal:
            raise InvalidMoveError("game over")
        kind = move.get("type")
        if kind == "reveal":
            self._apply_reveal(move.get("vertices") or [])
        elif kind == "burn":
            self._apply_burn(move)
        elif kind == "pass":
            self._apply_pass()
        else:
            raise InvalidMoveError(f"unknown move type {kind!r}")
        self.history.append({"actor": actor, **_canonical_move(move)})

    def _apply_reveal(self, vertices) -> None:
        if self.phase != PHASE_REVEAL:
            raise InvalidMoveError("not the reveal phase")
        vs = sorted(set(int(v) for v in vertices))
        if len(vs) != len(list(vertices)):
            raise InvalidMoveError("reveal contains duplicate vertices")
        for v in vs:
            if not 0 <= v < self.g.n:
                raise InvalidMoveError(f"vertex {v} out of range")
            if self.revealed >> v & 1:
                raise InvalidMoveError(f"vertex {v} is already revealed")
        quota = self.reveal_quota
        if len(vs) != quota:
            raise InvalidMoveError(f"reveal must contain exactly {quota} vertices")
        mask = mask_of(vs)
        if not self.reveal_burned:
            avail = self.g.full_mask & ~self.revealed & ~self.burned
            required = min(quota, avail.bit_count())
            unburned_picked = (mask & ~self.burned).bit_count()
            if unburned_picked < required:
                raise InvalidMoveError(
                    "burned vertices may only be revealed once no unburned "
                    f"unrevealed vertices remain (need {required} unburned picks)"
                )
        self.revealed |= mask
        self.phase = PHASE_BURN

    def _apply_burn(self, move: dict) -> None:
        if self.phase != PHASE_BURN:
            raise InvalidMoveError("not the burn phase")
        v = move.get("vertex")
        if v is None:
            vs = move.get("vertices") or []
            if len(vs) != 1:
                raise InvalidMoveError("burn takes exactly one vertex")
            v = vs[0]
        v = int(v)
        if not 0 <= v < self.g.n:
            raise InvalidMoveError(f"vertex {v} out of range")
        if not self.revealed >> v & 1:
            raise InvalidMoveError(f"vertex {v} is not revealed")
        if self.burned >> v & 1:
            raise InvalidMoveError(f"vertex {v} is already burned")
        self.burned |= 1 << v
        self._finish_round()

    def _apply_pass(self) -> None:
        if self.phase != PHASE_BURN:
            raise InvalidMoveError("not the burn phase")
        if self.revealed & ~self.burned:
            raise InvalidMoveError("pass is only legal with no revealed unburned vertex")
        self._finish_round()

    def _finish_round(self) -> None:
        if self.burned == self.g.full_mask:
            self.terminal = True
            self.rounds_total = self.round
            return
        self.burned = spread(self.g, self.burned)
        self.round += 1
        if self.burned == self.g.full_mask:
            self.terminal = True
            self.rounds_total = self.round
        else:
            self.phase = PHASE_REVEAL

    # -- engine play -----------------------------------------------------

    def engine_choice(self) -> dict:
        if self.phase == PHASE_REVEAL:
            if self.engine_mode == "exact":
                mask = self.solver().best_reveal(self.burned, self.revealed)
            else:
                mask = self._heuristic_reveal()
            return {"type": "reveal", "vertices": sorted(bits(mask))}
        options = self.revealed & ~self.burned
        if options == 0:
            return {"type": "pass"}
        if self.engine_mode == "exact":
            v = self.solver().best_burn(self.burned, self.revealed)
        else:
            v = self._heuristic_burn(options)
        return {"type": "burn", "vertex": v}

    def _coverage(self, v: int) -> int:
        """Unburned vertices that burning v would light up next propagation."""
        return ((self.g.adj_masks[v] | 1 << v) & ~self.burned).bit_count()

    def _heuristic_burn(self, options: int) -> int:
        return max(bits(options), key=lambda v: (self._coverage(v), -v))

    def _heuristic_reveal(self) -> int:
        """Greedy saboteur: reveal the legal vertices the arsonist wants least."""
        unrevealed = self.g.full_mask & ~self.revealed
        quota = min(self.k, unrevealed.bit_count())
        avail = unrevealed & ~self.burned
        ranked = sorted(bits(avail), key=lambda v: (self._coverage(v), v))
        picks = ranked[:quota]
        if len(picks) < quota:
            filler = [v for v in bits(unrevealed & self.burned)]
            picks += filler[: quota - len(picks)]
        return mask_of(picks)

    def hint(self) -> dict:
        if self.terminal:
            raise InvalidMoveError("game over")
        move = self.engine_choice()
        if self.engine_mode != "exact":
            return {"move": move, "value": None, "certified": False}
        solver = self.solver()
        phase = "reveal" if self.phase == PHASE_REVEAL else "burn"
        remaining = solver.state_value(self.burned, self.revealed, phase)
        return {"move": move, "value": self.round - 1 + remaining, "certified": True}

    # -- serialization ----------------------------------------------------

    def state_payload(self) -> dict:
        payload = {
            "id": self.id,
            "spec": self.g.label,
            "k": self.k,
            "role": self.role,
            "engine_mode": self.engine_mode,
            "reveal_burned": self.reveal_burned,
            "round": self.round,
            "phase": self.phase,
            "burned": sorted(bits(self.burned)),
            "revealed": sorted(bits(self.revealed)),
            "terminal": self.terminal,
            "to_move": self.to_move,
            "reveal_quota": self.reveal_quota,
            "bounds": self.bounds,
        }
        if self.terminal:
            payload["rounds_total"] = self.rounds_total
        if self.g.grid is not None and self.g.grid[1] == 2:
            payload["coords"] = [list(self.g.coord_of(v)) for v in range(self.g.n)]
        return payload


def _canonical_move(move: dict) -> dict:
    kind = move["type"]
    if kind == "reveal":
        return {"type": "reveal", "vertices": sorted(int(v) for v in move.get("vertices") or [])}
    if kind == "burn":
        v = move.get("vertex")
        if v is None:
            v = (move.get("vertices") or [None])[0]
        return {"type": "burn", "vertex": int(v)}
    return {"type": "pass"}


class SessionStore:
    """Sessions persisted as append-only JSONL move logs, keyed by id."""

    def __init__(self, directory: Path, exact_limit: int = 14, max_vertices: int = 64):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.exact_limit = exact_limit
        self.max_vertices = max_vertices
        self._cache: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            if session_id not in self._locks:
                self._locks[session_id] = threading.Lock()
            return self._locks[session_id]

    def _log_path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.jsonl"

    def _append(self, session_id: str, entry: dict) -> None:
        with self._log_path(session_id).open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(entry) + "\n")

    def create(self, spec: str, k: int, role: str, reveal_burned: bool = False) -> Session:
        g = parse_graph_spec(spec)
        if g.n > self.max_vertices:
            raise InvalidMoveError(
                f"graph has {g.n} vertices, over the service budget of {self.max_vertices}"
            )
        session_id = uuid.uuid4().hex[:12]
        session = Session(session_id, g, k, role, reveal_burned, self.exact_limit)
        self._append(
            session_id,
            {
                "type": "create",
                "id": session_id,
                "spec": spec,
                "k": k,
                "role": role,
                "reveal_burned": reveal_burned,
                "created": time.time(),
            },
        )
        self._cache[session_id] = session
        self.run_engine(session)
        return session

    def load(self, session_id: str) -> Session:
        cached = self._cache.get(session_id)
        if cached is not None:
            return cached
        path = self._log_path(session_id)
        if not path.exists():
            raise KeyError(session_id)
        session: Session | None = None
        with path.open("r", encoding="utf-8") as handle:
            for line in handle:
                entry = json.loads(line)
                if entry["type"] == "create":
                    g = parse_graph_spec(entry["spec"])
                    session = Session(
                        entry["id"],
                        g,
                        entry["k"],
                        entry["role"],
                        entry["reveal_burned"],
                        self.exact_limit,
                    )
                else:
                    if session is None:
                        raise ValueError(f"move before create in session log {session_id}")
                    session.apply(entry.pop("actor"), entry)
        if session is None:
            raise KeyError(session_id)
        self._cache[session_id] = session
        return session

    def apply_human_move(self, session: Session, move: dict) -> None:
        if session.to_move != "human":
            raise InvalidMoveError("not your turn")
        session.apply("human", move)
        self._append(session.id, {"actor": "human", **_canonical_move(move)})
        self.run_engine(session)

    def run_engine(self, session: Session) -> None:
        """Let the engine move until it is the human's turn or the game ends."""
        while not session.terminal and session.to_move == "engine":
            move = session.engine_choice()
            session.apply("engine", move)
            self._append(session.id, {"actor": "engine", **_canonical_move(move)})


class CreateSessionRequest(BaseModel):
    spec: str
    k: int
    role: Literal["arsonist", "saboteur", "spectator"] = "saboteur"
    reveal_burned: bool = False


class MoveRequest(BaseModel):
    type: Literal["reveal", "burn", "pass"]
    vertices: list[int] | None = None
    vertex: int | None = None


def create_app(
    sessions_dir: str | Path = "./burngames-sessions",
    exact_limit: int = 14,
    max_vertices: int = 64,
) -> FastAPI:
    """FastAPI app bound to a session directory."""
    store = SessionStore(Path(sessions_dir), exact_limit=exact_limit, max_vertices=max_vertices)
    app = FastAPI(title="burngames", version="0.1.0")
    app.state.store = store

    def get_session(session_id: str) -> Session:
        try:
            return store.load(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")

    @app.get("/healthz")
    def healthz():
        return {"ok": True}

    @app.post("/sessions")
    def create_session(request: CreateSessionRequest):
        try:
            session = store.create(
                request.spec, request.k, request.role, request.reveal_burned
            )
        except (GraphError, InvalidMoveError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except BudgetExceededError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"id": session.id, "state": session.state_payload()}

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str):
        session = get_session(session_id)
        with store.lock(session_id):
            return session.state_payload()

    @app.post("/sessions/{session_id}/move")
    def submit_move(session_id: str, move: MoveRequest):
        session = get_session(session_id)
        with store.lock(session_id):
            try:
                store.apply_human_move(session, move.model_dump(exclude_none=True))
            except InvalidMoveError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            return session.state_payload()

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str):
        session = get_session(session_id)
        with store.lock(session_id):
            try:
                return session.hint()
            except InvalidMoveError as exc:
                raise HTTPException(status_code=409, detail=str(exc))

    return app
