"""Decision procedures and budgeted searches for the sphere/ball hierarchy.

Exact decisions (skeleton comparisons, dual-graph trees, closure
reconstructions) return PROVED or REFUTED outright.  Searches either
carry a replayable certificate on success or degrade to UNKNOWN at the
budget; REFUTED from a search is only ever reported when the state space
was exhausted without hitting a budget cutoff.  Any verdict resting on a
homology screen carries a note saying which fields were screened.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .complexes import Complex, skeleta_equal
from .constructions import clique_closure, stacked_ball_closure
from .errors import (
    DimensionTooHigh,
    GuardExceeded,
    NotABall,
    NotASphere,
    NotClosed,
    NotNormalPseudomanifold,
    NotWeakPseudomanifold,
    SxError,
)
from .homology import (
    DEFAULT_FIELDS,
    _boundary_columns,
    _kernel_basis,
    _rank,
    betti,
    check_field,
    screen_homology_ball,
    screen_homology_sphere,
)
from .moves import (
    BistellarMove,
    MoveCertificate,
    ShellingMove,
    apply_bistellar,
    apply_shelling,
    bistellar_options,
    boundary_certificate,
    is_standard_sphere,
    replay,
    reverse_move,
)

PROVED = "PROVED"
REFUTED = "REFUTED"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SearchBudget:
    """Budget and reproducibility knobs shared by every search.

    max_nodes bounds backtracking states, max_moves bounds annealing
    steps per restart, and the geometric cooling schedule starts at
    t_initial and multiplies by cooling after each step.
    """

    max_nodes: int = 200_000
    max_moves: int = 10_000
    seed: int = 0
    restarts: int = 16
    t_initial: float = 2.0
    cooling: float = 0.995

    def rng(self, restart: int) -> random.Random:
        return random.Random((self.seed * 0x9E3779B97F4A7C15 + restart) & 0xFFFFFFFFFFFFFFFF)


@dataclass
class Verdict:
    status: str
    certificate: MoveCertificate | None = None
    witness: dict | None = None
    budget_spent: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def proved(self) -> bool:
        return self.status == PROVED

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    @property
    def exit_code(self) -> int:
        return {PROVED: 0, REFUTED: 1, UNKNOWN: 2}[self.status]

    def as_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.certificate is not None:
            import json

            out["certificate"] = json.loads(self.certificate.to_json())
        if self.witness is not None:
            out["witness"] = self.witness
        if self.budget_spent:
            out["budget_spent"] = self.budget_spent
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _faces_out(x: Complex, faces) -> list[list]:
    return [list(f) for f in x.sorted_faces(faces)]


# -- stackedness ---------------------------------------------------------------


def is_k_stacked_ball(b: Complex, k: int, fields=DEFAULT_FIELDS) -> Verdict:
    """Exact skeleton comparison between a screened ball and its boundary.

    A ball of dimension d+1 is k-stacked when every face of dimension
    <= d-k lies on the boundary.
    """
    screen = screen_homology_ball(b, fields)
    if not screen.passed:
        raise NotABall(screen.detail)
    d = b.dimension - 1
    bd = b.boundary()
    top = d - k
    notes = (screen.render_note(),)
    for m in range(0, top + 1):
        inner = b.faces(m) - bd.faces(m)
        if inner:
            w = min(inner, key=lambda f: b.face_tuple(f))
            return Verdict(
                REFUTED,
                witness={"interior_face": list(b.face_tuple(w)), "dimension": m},
                notes=notes,
            )
    return Verdict(
        PROVED,
        witness={
            "skeleton_checked_up_to": top,
            "face_counts": [len(b.faces(m)) for m in range(0, max(top + 1, 0))],
        },
        notes=notes,
    )


def is_one_stacked_ball(x: Complex) -> Verdict:
    """Dual-graph tree test; exact for normal pseudomanifolds."""
    if not x.classify().normal_pseudomanifold:
        raise NotNormalPseudomanifold("dual-graph tree test needs a normal pseudomanifold")
    g = x.dual_graph()
    if g.is_tree():
        return Verdict(
            PROVED,
            witness={"tree_edges": [[list(a), list(b)] for a, b in g.edge_faces()]},
        )
    reason = "disconnected dual graph" if not g.is_connected() else "dual graph has a cycle"
    return Verdict(
        REFUTED,
        witness={"reason": reason, "nodes": len(g.nodes), "edges": len(g.edges)},
    )


# -- shellability ---------------------------------------------------------------


def certify_k_shelled(b: Complex, k: int, budget: SearchBudget | None = None) -> Verdict:
    """Complete backtracking over shelling orders with index < k.

    States are subsets of facets already shelled, memoized in a global
    dead-set, so exhausting the space without a budget cutoff soundly
    refutes.  The certificate starts from the seed facet (a standard
    ball) and lists the attaching (alpha, beta) moves.
    """
    budget = budget or SearchBudget()
    if not b.is_pure or b.is_empty_complex:
        raise NotWeakPseudomanifold("shelling search needs a pure complex")
    if not (0 <= k <= b.dimension):
        raise ValueError(f"need 0 <= k <= {b.dimension}, got k={k}")
    facets = b.facets
    m = len(facets)
    if m == 1:
        seed = Complex([facets[0]])
        cert = MoveCertificate(
            kind="shelling", start_digest=seed.digest, moves=(), result_digest=b.digest
        )
        return Verdict(PROVED, certificate=cert)
    if k == 0:
        return Verdict(REFUTED, witness={"reason": "only the standard ball has no moves"})

    vsets = [frozenset(f) for f in facets]
    verts = b.vertices
    vindex = {v: i for i, v in enumerate(verts)}
    vbits = [sum(1 << vindex[v] for v in f) for f in vsets]

    # face -> bitmask of facets containing it, for every subset of a facet
    sub_mask: dict[frozenset, int] = {}
    import itertools

    for i, f in enumerate(vsets):
        for r in range(1, len(f) + 1):
            for s in itertools.combinations(facets[i], r):
                key = frozenset(s)
                sub_mask[key] = sub_mask.get(key, 0) | (1 << i)

    dmax = b.dimension
    full = (1 << m) - 1
    dead: set[int] = set()
    nodes = 0
    cutoff = False

    def moves_from(state: int, vmask: int):
        out = []
        for j in range(m):
            if state >> j & 1:
                continue
            fresh = vbits[j] & ~vmask
            if fresh.bit_count() > 1:
                continue
            sigma = vsets[j]
            if fresh:
                u = verts[fresh.bit_length() - 1]
                alpha = sigma - {u}
                if (sub_mask.get(alpha, 0) & state).bit_count() == 1:
                    out.append((j, ShellingMove(alpha=b.face_tuple(alpha), beta=(u,))))
                continue
            best = None
            for r in range(1, min(k, dmax) + 1):
                for s in itertools.combinations(facets[j], r):
                    beta = frozenset(s)
                    if sub_mask.get(beta, 0) & state:
                        continue
                    if all(
                        (sub_mask.get(sigma - {v}, 0) & state).bit_count() == 1
                        for v in beta
                    ):
                        best = ShellingMove(
                            alpha=b.face_tuple(sigma - beta), beta=b.face_tuple(beta)
                        )
                        break
                if best:
                    break
            if best:
                out.append((j, best))
        return out

    for seed_i in range(m):
        state = 1 << seed_i
        if state in dead:
            continue
        # frames: (state, vmask, pending child moves, move that entered)
        stack = [(state, vbits[seed_i], None, None)]
        path: list[tuple[int, ShellingMove]] = []
        while stack:
            cur, vmask, pending, entered = stack[-1]
            if cur == full:
                moves = tuple(mv for _, mv in path)
                seed = Complex([facets[seed_i]])
                cert = MoveCertificate(
                    kind="shelling",
                    start_digest=seed.digest,
                    moves=moves,
                    result_digest=b.digest,
                )
                return Verdict(
                    PROVED,
                    certificate=cert,
                    budget_spent={"nodes": nodes, "seed": budget.seed},
                )
            if pending is None:
                nodes += 1
                if nodes > budget.max_nodes:
                    cutoff = True
                    break
                pending = moves_from(cur, vmask)
                stack[-1] = (cur, vmask, pending, entered)
            advanced = False
            while pending:
                j, mv = pending.pop(0)
                nxt = cur | (1 << j)
                if nxt in dead:
                    continue
                stack.append((nxt, vmask | vbits[j], None, mv))
                path.append((j, mv))
                advanced = True
                break
            if not advanced:
                dead.add(cur)
                stack.pop()
                if path:
                    path.pop()
        if cutoff:
            break
    if cutoff:
        return Verdict(
            UNKNOWN,
            witness={"reason": "node budget exhausted"},
            budget_spent={"nodes": nodes, "seed": budget.seed},
        )
    return Verdict(
        REFUTED,
        witness={"reason": "complete backtracking exhausted all shelling orders"},
        budget_spent={"nodes": nodes, "seed": budget.seed},
    )


# -- stellatedness ----------------------------------------------------------------


def _forward_certificate(target: Complex, final: Complex, trail) -> MoveCertificate:
    moves = tuple(reverse_move(mv) for mv in reversed(trail))
    cert = MoveCertificate(
        kind="bistellar",
        start_digest=final.digest,
        moves=moves,
        result_digest=target.digest,
    )
    replay(cert, final)  # certificate must replay before we hand it out
    return cert


def _tree_shelling_certificate(ball: Complex) -> MoveCertificate:
    """Shelling certificate of a ball whose dual graph is a tree (breadth
    first from the canonical root; every attachment is an index-0 move)."""
    g = ball.dual_graph()
    n = len(g.nodes)
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, bb in g.edges:
        adj[a].append(bb)
        adj[bb].append(a)
    order = [0]
    seen = {0}
    queue = [0]
    parent = {0: None}
    while queue:
        cur = queue.pop(0)
        for w in sorted(adj[cur]):
            if w not in seen:
                seen.add(w)
                parent[w] = cur
                order.append(w)
                queue.append(w)
    seed = Complex([g.nodes[0]])
    current = seed
    moves = []
    for i in order[1:]:
        sigma = frozenset(g.nodes[i])
        ridge = sigma & frozenset(g.nodes[parent[i]])
        (u,) = sigma - ridge
        mv = ShellingMove(alpha=ball.face_tuple(ridge), beta=(u,))
        current = apply_shelling(current, mv)
        moves.append(mv)
    return MoveCertificate(
        kind="shelling",
        start_digest=seed.digest,
        moves=tuple(moves),
        result_digest=ball.digest,
    )


def _descent_search(s: Complex, lo: int, budget: SearchBudget):
    """Randomized greedy reduction with geometric-cooling acceptance.

    Moves are restricted to indices in [lo, d]; energy is the facet
    count.  Returns (trail, final) on success, else None.
    """
    d = s.dimension
    counters = {"moves_tried": 0, "restarts": 0, "seed": budget.seed}
    for restart in range(budget.restarts):
        counters["restarts"] = restart + 1
        rng = budget.rng(restart)
        current = s
        temperature = budget.t_initial
        trail: list[BistellarMove] = []
        for _ in range(budget.max_moves):
            if is_standard_sphere(current):
                return trail, current, counters
            opts = bistellar_options(current, lo, d)
            if not opts:
                break
            best_drop = max(2 * mv.index - d for mv in opts)
            greedy = [mv for mv in opts if 2 * mv.index - d == best_drop]
            if rng.random() < 0.8:
                mv = rng.choice(greedy)
            else:
                mv = rng.choice(opts)
                drop = 2 * mv.index - d
                if drop < best_drop:
                    # non-optimal move: Metropolis acceptance on the gap
                    gap = best_drop - drop
                    if rng.random() >= math.exp(-gap / max(temperature, 1e-9)):
                        mv = rng.choice(greedy)
            current = apply_bistellar(current, mv)
            trail.append(mv)
            counters["moves_tried"] += 1
            temperature *= budget.cooling
        if is_standard_sphere(current):
            return trail, current, counters
    return None, None, counters


def _exhaustive_search(s: Complex, lo: int, budget: SearchBudget):
    """Backtracking over the full reverse-move DAG, memoized by digest."""
    d = s.dimension
    counters = {"nodes": 0, "seed": budget.seed}
    dead: set[str] = set()
    stack = [(s, None, None)]
    path: list[BistellarMove] = []
    while stack:
        current, pending, entered = stack[-1]
        if is_standard_sphere(current):
            return list(path), current, counters
        if pending is None:
            counters["nodes"] += 1
            if counters["nodes"] > budget.max_nodes:
                return None, None, counters
            pending = list(bistellar_options(current, lo, d))
            stack[-1] = (current, pending, entered)
        advanced = False
        while pending:
            mv = pending.pop(0)
            nxt = apply_bistellar(current, mv)
            if nxt.digest in dead:
                continue
            stack.append((nxt, None, mv))
            path.append(mv)
            advanced = True
            break
        if not advanced:
            dead.add(current.digest)
            stack.pop()
            if path:
                path.pop()
    return None, None, counters


def certify_k_stellated(
    s: Complex,
    k: int,
    budget: SearchBudget | None = None,
    fields=DEFAULT_FIELDS,
    exhaustive: bool = False,
) -> Verdict:
    """Reduce s to the standard sphere by reverse moves of index > d-k.

    k = 0 is an equality test and k = 1 is decided exactly through the
    stacked-ball reconstruction; for k >= 2 this is a semi-decision that
    answers PROVED (with a replayable forward certificate) or UNKNOWN.
    """
    budget = budget or SearchBudget()
    cls = s.classify()
    if not cls.weak_pseudomanifold:
        raise NotWeakPseudomanifold("stellatedness is defined for pure closed pseudomanifolds")
    if not cls.closed:
        raise NotClosed("input has non-empty boundary")
    d = s.dimension
    if not 0 <= k <= d + 1:
        raise ValueError(f"need 0 <= k <= {d + 1}, got k={k}")
    if is_standard_sphere(s):
        cert = MoveCertificate(
            kind="bistellar", start_digest=s.digest, moves=(), result_digest=s.digest
        )
        return Verdict(PROVED, certificate=cert)
    if k == 0:
        return Verdict(REFUTED, witness={"reason": "not the standard sphere"})
    screen = screen_homology_sphere(s, fields)
    if not screen.passed:
        # stellated complexes are combinatorial spheres, so any homology
        # defect over any field refutes outright
        return Verdict(
            REFUTED,
            witness={"reason": f"not a homology sphere: {screen.detail}"},
            notes=(screen.render_note(),),
        )
    if k == 1 and d >= 2:
        inner = certify_k_stacked_sphere(s, 1, fields=fields)
        if inner.refuted:
            return Verdict(REFUTED, witness=inner.witness, notes=inner.notes)
        ball = stacked_ball_closure(s, 1)
        try:
            shelling = _tree_shelling_certificate(ball)
            seed = Complex([ball.facets[0]])
            cert = boundary_certificate(shelling, seed)
            replay(cert, seed.boundary())
        except SxError as exc:
            return Verdict(
                UNKNOWN,
                witness={"reason": f"reconstructed ball rejected a tree shelling: {exc}"},
                notes=inner.notes,
            )
        return Verdict(PROVED, certificate=cert, notes=inner.notes)
    lo = max(d - k + 1, 0)
    trail, final, counters = _descent_search(s, lo, budget)
    if trail is None and exhaustive:
        trail, final, counters = _exhaustive_search(s, lo, budget)
    if trail is not None:
        cert = _forward_certificate(s, final, trail)
        return Verdict(PROVED, certificate=cert, budget_spent=counters)
    return Verdict(
        UNKNOWN,
        witness={"reason": "reduction search did not reach the standard sphere"},
        budget_spent=counters,
    )


def certify_k_stacked_sphere(
    s: Complex, k: int, candidate: Complex | None = None, fields=DEFAULT_FIELDS
) -> Verdict:
    """Decide k-stackedness of a screened homology sphere.

    For dimension >= 2k the clique-style closure is the unique candidate
    ball, so checking it is decisive.  Below that bound a refutation is
    still available when the degree-(d-k+1) closure adds nothing (any
    witness ball would lie inside the sphere itself); otherwise only a
    caller-supplied ball can prove.
    """
    screen = screen_homology_sphere(s, fields)
    if not screen.passed:
        raise NotASphere(screen.detail)
    d = s.dimension
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= {d}, got k={k}")
    notes = (screen.render_note(),)
    if d >= 2 * k:
        ball = stacked_ball_closure(s, k)
        if ball == s:
            return Verdict(
                REFUTED,
                witness={"reason": "closure adds no faces beyond the sphere"},
                notes=notes,
            )
        if ball.dimension != d + 1 or not ball.is_pure:
            return Verdict(
                REFUTED,
                witness={
                    "reason": "closure is not a pure complex of one higher dimension",
                    "closure_dimension": ball.dimension,
                },
                notes=notes,
            )
        try:
            bd = ball.boundary()
        except NotWeakPseudomanifold:
            return Verdict(
                REFUTED, witness={"reason": "closure is not a weak pseudomanifold"}, notes=notes
            )
        if bd != s:
            return Verdict(
                REFUTED,
                witness={"reason": "closure boundary differs from the sphere"},
                notes=notes,
            )
        inner = screen_homology_ball(ball, fields)
        if not inner.passed:
            return Verdict(REFUTED, witness={"reason": f"closure: {inner.detail}"}, notes=notes)
        if not skeleta_equal(ball, s, d - k):
            for m in range(0, d - k + 1):
                diff = ball.faces(m) - s.faces(m)
                if diff:
                    w = min(diff, key=lambda f: ball.face_tuple(f))
                    return Verdict(
                        REFUTED,
                        witness={
                            "reason": "closure has an interior face of low dimension",
                            "interior_face": list(ball.face_tuple(w)),
                        },
                        notes=notes,
                    )
        return Verdict(
            PROVED,
            witness={"ball_facets": _faces_out(ball, ball.facet_sets)},
            notes=notes,
        )
    if k == d:
        # top-degree stackedness always holds: the cone over a vertex's
        # antistar is a ball with the same vertex set bounding s
        from .constructions import vertex_ball

        ball = vertex_ball(s, s.vertices[0])
        sub = is_k_stacked_ball(ball, k, fields)
        if sub.proved and ball.boundary() == s:
            return Verdict(
                PROVED,
                witness={"vertex_ball_apex": str(s.vertices[0])},
                notes=notes,
            )
    # d < 2k: no uniqueness; refute via the skeleton-forced closure if possible
    forced = clique_closure(s, d - k + 1)
    if forced == s:
        return Verdict(
            REFUTED,
            witness={
                "reason": "every face of a k-stacked bounding ball would lie in the sphere",
            },
            notes=notes,
        )
    if candidate is not None:
        try:
            bounds = candidate.boundary() == s
        except NotWeakPseudomanifold:
            bounds = False
        if not bounds:
            return Verdict(
                UNKNOWN,
                witness={"reason": "candidate ball does not bound the sphere"},
                notes=notes,
            )
        sub = is_k_stacked_ball(candidate, k, fields)
        if sub.proved:
            return Verdict(
                PROVED,
                witness={"candidate_ball_facets": _faces_out(candidate, candidate.facet_sets)},
                notes=notes + sub.notes,
            )
        return Verdict(
            UNKNOWN,
            witness={"reason": "candidate ball is not k-stacked", "detail": sub.witness},
            notes=notes,
        )
    return Verdict(
        UNKNOWN,
        witness={"reason": f"dimension {d} < 2k; supply a candidate ball"},
        notes=notes,
    )


def flip_scan(s: Complex, lo: int, hi: int) -> list[BistellarMove]:
    """All bistellar moves with index in [lo, hi]; empty on k-stacked
    spheres over the forbidden middle range."""
    return bistellar_options(s, lo, hi)


# -- ears and collapsibility -----------------------------------------------------


def _is_path(c: Complex) -> bool:
    if c.dimension != 1 or not c.is_pure:
        return False
    deg: dict = {}
    for e in c.faces(1):
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    if max(deg.values()) > 2:
        return False
    if len(c.faces(1)) != len(c.vertices) - 1:
        return False
    return c.is_connected


def _is_disk(c: Complex) -> bool:
    """Exact test: connected 2-manifold, one boundary cycle, chi = 1."""
    if c.dimension != 2 or not c.is_pure:
        return False
    edge_deg: dict = {}
    for t in c.faces(2):
        for v in t:
            e = t - {v}
            edge_deg[e] = edge_deg.get(e, 0) + 1
    if any(n > 2 for n in edge_deg.values()):
        return False
    # every vertex link must be a single path or a single cycle
    for v in c.vertices:
        lk = c.link((v,))
        if lk.dimension != 1:
            return False
        if not (_is_path(lk) or _is_cycle(lk)):
            return False
    if not c.is_connected:
        return False
    rim = [e for e, n in edge_deg.items() if n == 1]
    if not rim:
        return False
    if not _is_cycle(Complex(rim)):
        return False
    return c.euler_characteristic == 1


def _is_cycle(c: Complex) -> bool:
    if c.dimension != 1 or not c.is_pure:
        return False
    deg: dict = {}
    for e in c.faces(1):
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    return all(n == 2 for n in deg.values()) and c.is_connected


def is_ball_exact(c: Complex, dim: int) -> bool:
    """Exact triangulated-ball recognition for dimensions 0..2."""
    if dim == 0:
        return c.dimension == 0 and len(c.vertices) == 1
    if dim == 1:
        return _is_path(c)
    if dim == 2:
        return _is_disk(c)
    raise DimensionTooHigh(f"no exact ball recognition in dimension {dim}")


def ear_scan(
    b: Complex,
    mode: str = "auto",
    budget: SearchBudget | None = None,
    fields=DEFAULT_FIELDS,
) -> list[tuple]:
    """Facets whose removal leaves a ball, via the boundary-restriction test.

    A facet is an ear iff the faces of the boundary inside its vertex set
    form a (d-1)-ball; decided exactly for d-1 <= 2, by a budgeted
    shellability screen above that (mode="exact" then raises).
    """
    facets = b.facets
    if len(facets) == 1:
        return [facets[0]]
    screen = screen_homology_ball(b, fields)
    if not screen.passed:
        raise NotABall(screen.detail)
    d = b.dimension
    exact = d - 1 <= 2
    if mode == "exact" and not exact:
        raise DimensionTooHigh(f"exact ear scan unavailable for facet dimension {d}")
    bd = b.boundary()
    ears = []
    for f in facets:
        u = set(f) & bd.vertex_set
        sub = bd.induced(u)
        if exact:
            if is_ball_exact(sub, d - 1):
                ears.append(f)
        else:
            if sub.dimension != d - 1 or not sub.is_pure:
                continue
            if sub.boundary().is_empty_complex:
                continue
            v = certify_k_shelled(sub, sub.dimension, budget)
            if v.proved:
                ears.append(f)
    return ears


def collapse(b: Complex, budget: SearchBudget | None = None) -> Verdict:
    """Greedy free-face collapsing with randomized restarts.

    PROVED returns the elementary collapse sequence down to one vertex;
    greedy incompleteness means failure only ever yields UNKNOWN.
    """
    budget = budget or SearchBudget()
    if b.is_empty_complex:
        raise NotWeakPseudomanifold("cannot collapse the empty complex")
    base_faces = set(b.all_faces())
    steps_total = 0
    for restart in range(budget.restarts):
        rng = budget.rng(restart)
        faces = set(base_faces)
        seq = []
        while True:
            if len(faces) == 1 and len(next(iter(faces))) == 1:
                return Verdict(
                    PROVED,
                    witness={
                        "collapse_steps": [
                            [list(b.face_tuple(g)), list(b.face_tuple(s))] for g, s in seq
                        ],
                        "final_vertex": list(b.face_tuple(next(iter(faces)))),
                    },
                    budget_spent={"restarts": restart + 1, "steps": steps_total, "seed": budget.seed},
                )
            cof: dict = {}
            for f in faces:
                for v in f:
                    g = f - {v}
                    if g:
                        cof[g] = cof.get(g, 0) + 1
            # the face set stays downward closed, so one covering coface
            # means one proper coface overall: exactly the free faces
            free = [g for g, n in cof.items() if n == 1]
            if not free:
                break
            top = max(len(g) for g in free)
            pool = sorted((g for g in free if len(g) == top), key=b.face_tuple)
            g = pool[rng.randrange(len(pool))]
            (s,) = [f2 for f2 in faces if g < f2 and len(f2) == len(g) + 1]
            faces.discard(g)
            faces.discard(s)
            seq.append((g, s))
            steps_total += 1
    return Verdict(
        UNKNOWN,
        witness={"reason": "greedy collapsing stalled on every restart"},
        budget_spent={"restarts": budget.restarts, "steps": steps_total, "seed": budget.seed},
    )


# -- link classes -----------------------------------------------------------------


def is_in_class(
    m: Complex,
    k: int,
    cls: str = "W",
    budget: SearchBudget | None = None,
    fields=DEFAULT_FIELDS,
    use_symmetry: bool = True,
) -> Verdict:
    """Check every vertex link for k-stellatedness (class W) or
    k-stackedness (class K); one link per vertex orbit when the
    automorphism group is available."""
    if cls not in ("W", "K"):
        raise ValueError("cls must be 'W' or 'K'")
    if not m.is_pure or not m.is_connected:
        raise NotWeakPseudomanifold("class membership is defined for connected pure complexes")
    reps = list(m.vertices)
    if use_symmetry:
        try:
            from .symmetry import automorphism_group

            group = automorphism_group(m)
            reps = [orbit[0] for orbit in group.vertex_orbits]
        except (GuardExceeded, SxError):
            pass
    unknowns = []
    notes: tuple[str, ...] = ()
    for v in reps:
        lk = m.link((v,))
        try:
            if cls == "W":
                sub = certify_k_stellated(lk, k, budget, fields)
            else:
                sub = certify_k_stacked_sphere(lk, k, fields=fields)
        except SxError as exc:
            return Verdict(
                REFUTED,
                witness={"vertex": str(v), "reason": f"link fails structure: {exc}"},
            )
        notes = tuple(dict.fromkeys(notes + sub.notes))
        if sub.refuted:
            return Verdict(REFUTED, witness={"vertex": str(v), "link": sub.witness}, notes=notes)
        if not sub.proved:
            unknowns.append(str(v))
    if unknowns:
        return Verdict(UNKNOWN, witness={"vertices_unknown": unknowns}, notes=notes)
    return Verdict(PROVED, witness={"links_checked": [str(v) for v in reps]}, notes=notes)


# -- tightness --------------------------------------------------------------------


def tightness_beta_condition(m: Complex, k: int, field: int) -> Verdict:
    """Exact integer test of the middle Betti number formula
    binom(n-k-3, k+1) / binom(2k+3, k+1) for members of the class
    W_k(2k+1); a non-integer right side refutes outright."""
    check_field(field)
    n = len(m.vertices)
    num = math.comb(n - k - 3, k + 1)
    den = math.comb(2 * k + 3, k + 1)
    if num % den:
        return Verdict(
            REFUTED,
            witness={"reason": "required Betti number is not an integer", "value": f"{num}/{den}"},
        )
    required = num // den
    actual = betti(m, field)[k]
    if actual == required:
        return Verdict(PROVED, witness={"beta_k": actual, "required": required})
    return Verdict(REFUTED, witness={"beta_k": actual, "required": required})


def required_tight_beta(k: int, n: int) -> tuple[int, int]:
    """Numerator and denominator of the tightness Betti formula."""
    return math.comb(n - k - 3, k + 1), math.comb(2 * k + 3, k + 1)


def _induced_rank_injective(x: Complex, y: Complex, j: int, field: int, x_cols_cache) -> bool:
    """Injectivity of reduced H_j(y) -> H_j(x) for an induced subcomplex y.

    Cycle bases of y are lifted into x's chain space and augmented with
    the boundary image of x; the map is injective iff no new cycle
    becomes a boundary, measured through exact ranks.
    """
    y_j_faces = y.sorted_faces(y.faces(j))
    if not y_j_faces:
        return True
    y_cols = _boundary_columns(y, j)
    z_basis = _kernel_basis(y_cols, field)
    if not z_basis:
        return True
    by_rank = _rank(_boundary_columns(y, j + 1), field) if j + 1 <= y.dimension else 0
    if j + 1 in x_cols_cache:
        bx_cols = x_cols_cache[j + 1]
    else:
        bx_cols = _boundary_columns(x, j + 1) if j + 1 <= x.dimension else []
        x_cols_cache[j + 1] = bx_cols
    if ("rank", j + 1) not in x_cols_cache:
        x_cols_cache[("rank", j + 1)] = _rank(bx_cols, field)
    bx_rank = x_cols_cache[("rank", j + 1)]
    x_index = {frozenset(f): i for i, f in enumerate(x.sorted_faces(x.faces(j)))}
    lift = [
        {x_index[frozenset(y_j_faces[i])]: v for i, v in vec.items()} for vec in z_basis
    ]
    joint = _rank(lift + bx_cols, field)
    return joint == len(z_basis) + bx_rank - by_rank


def is_tight_exhaustive(x: Complex, field: int, guard: int = 16) -> Verdict:
    """Brute force over induced subcomplexes: REFUTED at the first one
    whose reduced homology fails to inject."""
    check_field(field)
    n = len(x.vertices)
    if n > guard:
        raise GuardExceeded(f"{n} vertices exceed the guard {guard}")
    import itertools

    x_cols_cache: dict = {}
    verts = x.vertices
    for size in range(1, n):
        for combo in itertools.combinations(verts, size):
            y = x.induced(combo)
            for j in range(0, y.dimension + 1):
                if not _induced_rank_injective(x, y, j, field, x_cols_cache):
                    return Verdict(
                        REFUTED,
                        witness={"vertices": [str(v) for v in combo], "dimension": j},
                    )
    return Verdict(PROVED, witness={"subsets_checked": 2**n - 2})
