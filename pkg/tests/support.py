"""Shared hypothesis strategies and small workload builders."""

import string

from hypothesis import strategies as st

from listlab import make_workload
from listlab.workloads import list_elements

TOKEN_CHARS = string.ascii_uppercase + string.ascii_lowercase + string.digits + "_-.@"

tokens = st.text(alphabet=TOKEN_CHARS, min_size=1, max_size=5)

unique_token_lists = st.lists(tokens, unique=True, min_size=1, max_size=8)


@st.composite
def workloads(draw, max_l=8, max_n=24, buffers=(0, 1, 2, 3, 5)):
    """Workloads over position-named elements, valid by construction."""
    l = draw(st.integers(1, max_l))
    elements = list_elements(l)
    idxs = draw(st.lists(st.integers(0, l - 1), max_size=max_n))
    capacity = draw(st.sampled_from(list(buffers)))
    return make_workload(elements, (elements[i] for i in idxs), capacity)


@st.composite
def text_workloads(draw):
    """Workloads over arbitrary tokens, for file format round-trips."""
    elements = draw(unique_token_lists)
    idxs = draw(st.lists(st.integers(0, len(elements) - 1), max_size=12))
    capacity = draw(st.integers(0, 9))
    return make_workload(elements, (elements[i] for i in idxs), capacity)
