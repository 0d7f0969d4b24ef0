import sys
from pathlib import Path

import pytest

from cospec import Graph, parse_graph6, parse_plan

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent.parent / "fixtures"
PLAN_DIR = FIXTURES / "plans"
GRAPH_DIR = FIXTURES / "graphs"

PLAN_NAMES = (
    "codegree_twin_triples",
    "cotransmission_m2",
    "cotransmission_m4_paw",
    "codegree_m6_join",
    "relaxed_m5_double_matching",
)


def load_plan(name: str):
    return parse_plan((PLAN_DIR / f"{name}.plan").read_text())


def load_corpus(name: str) -> list[Graph]:
    path = GRAPH_DIR / f"{name}.g6"
    return [parse_graph6(line) for line in path.read_text().splitlines() if line]


@pytest.fixture(scope="session")
def all_graphs_by_n():
    return {n: load_corpus(f"all_n{n}") for n in range(1, 7)}


@pytest.fixture(scope="session")
def connected_n7():
    return load_corpus("connected_n7")
