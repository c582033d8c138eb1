import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from seqforge.corrcore import PhaseSequence, SequenceMatrix

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def golden():
    return json.loads((FIXTURES / "golden.json").read_text())


def signs(rows) -> SequenceMatrix:
    return SequenceMatrix.from_values(np.array(rows), 2)


def seq(values, q=2) -> PhaseSequence:
    return PhaseSequence.from_values(values, q)


@st.composite
def phase_sequences(draw, q=None, min_len=1, max_len=24):
    q = draw(st.sampled_from([2, 4])) if q is None else q
    L = draw(st.integers(min_len, max_len))
    exps = draw(st.lists(st.integers(0, q - 1), min_size=L, max_size=L))
    return PhaseSequence(q, np.array(exps))


@st.composite
def sequence_pairs(draw, moduli=(2, 4, 6), min_len=1, max_len=24):
    q = draw(st.sampled_from(moduli))
    L = draw(st.integers(min_len, max_len))
    a = draw(st.lists(st.integers(0, q - 1), min_size=L, max_size=L))
    b = draw(st.lists(st.integers(0, q - 1), min_size=L, max_size=L))
    return PhaseSequence(q, np.array(a)), PhaseSequence(q, np.array(b))


ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
