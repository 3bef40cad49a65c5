"""Quantum circuits as ordered gate lists with implied DAG semantics.

Qubits are named by strings at the interface; gates store dense qubit
indices.  The dependency DAG follows list order restricted to shared qubits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TWO_QUBIT_GATES = ("cx", "swap")
KNOWN_GATES = ("u", "h", "x", "rz", "cx", "swap")


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self):
        if len(self.qubits) == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError(f"{self.name} acts twice on qubit {self.qubits[0]}")

    @property
    def is_two_qubit(self) -> bool:
        return len(self.qubits) == 2


@dataclass(frozen=True)
class GateWeights:
    """Cost model for weighted size/depth: 1-qubit, CNOT, SWAP."""
    one_qubit: int = 1
    cnot: int = 10
    swap: int = 30

    def of(self, gate: Gate) -> int:
        if not gate.is_two_qubit:
            return self.one_qubit
        return self.swap if gate.name == "swap" else self.cnot


DEFAULT_WEIGHTS = GateWeights()


@dataclass
class FrontLayer:
    """Gates with no unexecuted predecessors.

    ``two_qubit`` lists (gate index, (q1, q2)) for the two-qubit members.
    """
    gates: list[int]
    two_qubit: list[tuple[int, tuple[int, int]]]

    def tg(self) -> list[tuple[int, int]]:
        return [pair for _, pair in self.two_qubit]


class Circuit:
    def __init__(self, qubits: list[str], gates: list[Gate] | None = None):
        if len(set(qubits)) != len(qubits):
            raise ValueError("duplicate qubit names")
        self.qubits: list[str] = list(qubits)
        self.gates: list[Gate] = []
        for g in gates or []:
            self.append(g)

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    def append(self, gate: Gate) -> None:
        for q in gate.qubits:
            if not (0 <= q < self.n_qubits):
                raise ValueError(f"qubit index {q} out of range")
        self.gates.append(gate)

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Circuit) and self.qubits == other.qubits
                and self.gates == other.gates)

    def predecessor_counts(self) -> list[int]:
        """Number of direct DAG predecessors per gate (last writer per qubit)."""
        counts = [0] * len(self.gates)
        last: dict[int, int] = {}
        for i, g in enumerate(self.gates):
            preds = {last[q] for q in g.qubits if q in last}
            counts[i] = len(preds)
            for q in g.qubits:
                last[q] = i
        return counts

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in self.gates]
        last: dict[int, int] = {}
        for i, g in enumerate(self.gates):
            preds = {last[q] for q in g.qubits if q in last}
            for p in preds:
                succ[p].append(i)
            for q in g.qubits:
                last[q] = i
        return succ


def front_layer(circuit: Circuit, executed: set[int]) -> FrontLayer:
    """First layer of the DAG after removing the executed gates.

    ``executed`` must be dependency-closed.
    """
    blocked: set[int] = set()
    layer: list[int] = []
    two_q: list[tuple[int, tuple[int, int]]] = []
    for i, g in enumerate(circuit.gates):
        if i in executed:
            continue
        if any(q in blocked for q in g.qubits):
            blocked.update(g.qubits)
            continue
        layer.append(i)
        if g.is_two_qubit:
            two_q.append((i, (g.qubits[0], g.qubits[1])))
        blocked.update(g.qubits)
    return FrontLayer(layer, two_q)


def layers(circuit: Circuit) -> list[FrontLayer]:
    """Partition gates into layers; the count is the circuit depth."""
    executed: set[int] = set()
    out: list[FrontLayer] = []
    while len(executed) < len(circuit.gates):
        fl = front_layer(circuit, executed)
        out.append(fl)
        executed.update(fl.gates)
    return out


@dataclass
class Metrics:
    weighted_size: int
    weighted_depth: int
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def one_qubit_count(self) -> int:
        return sum(c for name, c in self.counts.items() if name not in TWO_QUBIT_GATES)

    @property
    def cnot_count(self) -> int:
        return self.counts.get("cx", 0)

    @property
    def swap_count(self) -> int:
        return self.counts.get("swap", 0)


def weighted_metrics(circuit: Circuit, weights: GateWeights = DEFAULT_WEIGHTS) -> Metrics:
    """Weighted size (sum of gate weights) and weighted depth (max-weight DAG
    path, via per-qubit running maxima)."""
    size = 0
    depth = [0] * circuit.n_qubits
    counts: dict[str, int] = {}
    for g in circuit.gates:
        w = weights.of(g)
        size += w
        reach = max(depth[q] for q in g.qubits) + w
        for q in g.qubits:
            depth[q] = reach
        counts[g.name] = counts.get(g.name, 0) + 1
    return Metrics(size, max(depth, default=0), counts)


def random_circuit(n_qubits: int, n_layers: int = 20, seed: int | None = None) -> Circuit:
    """Random benchmark circuit: per layer, qubits are binned into uniformly
    random pairs and each pair receives a 3-CNOT two-qubit block with random
    angles (one qubit idles when the count is odd)."""
    if n_qubits < 2:
        raise ValueError("need at least 2 qubits")
    rng = np.random.default_rng(seed)
    circ = Circuit([f"q[{i}]" for i in range(n_qubits)])

    def u(q: int) -> Gate:
        theta, phi, lam = rng.uniform(0.0, 2 * math.pi, size=3)
        return Gate("u", (q,), (theta, phi, lam))

    for _ in range(n_layers):
        order = [int(x) for x in rng.permutation(n_qubits)]
        for k in range(n_qubits // 2):
            a, b = order[2 * k], order[2 * k + 1]
            circ.append(u(a))
            circ.append(u(b))
            for _ in range(3):
                circ.append(Gate("cx", (a, b)))
                circ.append(u(a))
                circ.append(u(b))
    return circ
