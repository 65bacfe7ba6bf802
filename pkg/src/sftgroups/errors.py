"""Exception hierarchy shared by every module.

Each error carries a stable ``name`` (used verbatim in CLI/service output)
and a ``category``: "validation" for malformed or inadmissible input,
"operation" for well-formed requests that fail for a mathematical reason.
"""

from __future__ import annotations


class SftError(Exception):
    name = "SftError"
    category = "validation"

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.name)
        self.detail = detail or self.name


def _make(name: str, category: str, base=SftError):
    return type(name, (base,), {"name": name, "category": category})


# graph_core
NotIrreducible = _make("NotIrreducible", "validation")
IsPermutation = _make("IsPermutation", "validation")
MatrixEdgeMismatch = _make("MatrixEdgeMismatch", "validation")
NotAdmissible = _make("NotAdmissible", "validation")
NotComposable = _make("NotComposable", "validation")

# integer_lattice
TorsionTooLarge = _make("TorsionTooLarge", "operation")
NoSolution = _make("NoSolution", "operation")

# clopen_homology
LevelTooSmall = _make("LevelTooSmall", "validation")
NotInKernel = _make("NotInKernel", "operation")

# element_algebra
AmbientMismatch = _make("AmbientMismatch", "validation")
PointOutsideAmbient = _make("PointOutsideAmbient", "validation")
ClassesDiffer = _make("ClassesDiffer", "operation")
NotDisjoint = _make("NotDisjoint", "validation")
NotInAmbient = _make("NotInAmbient", "validation")
EmptyInput = _make("EmptyInput", "validation")
NotPrimitive = _make("NotPrimitive", "operation")
NotKernelVector = _make("NotKernelVector", "validation")
CycleCheckFailed = _make("CycleCheckFailed", "operation")
AmbientNotX = _make("AmbientNotX", "validation")
StepBudgetExceeded = _make("StepBudgetExceeded", "operation")

# file / wire schemas
SchemaError = _make("SchemaError", "validation")
