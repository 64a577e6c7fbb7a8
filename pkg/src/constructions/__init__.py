"""
End-to-end constructions of the two fibration families.
"""

from .auxiliary import (
    PsiMaps,
    auxiliary_lantern,
    lantern_candidates,
    phi_n,
    phi_twists,
    psi_catalog,
    psi_words,
    select_e2,
)
from .controller import ConstructionController
from .lemma import chain_rewrite_plan, lemma41, rewritten_chain
from .pipeline import PipelineReport, StageRecord, StageRunner, TrivialityWitness
from .theorem1 import THEOREM1, build_theorem1, check_witness, find_witness
from .theorem2 import THEOREM2, build_theorem2, certificate_basis, pi1_stages, reduce_pi1, u_n_display

__all__ = [
    "PsiMaps",
    "auxiliary_lantern",
    "lantern_candidates",
    "phi_n",
    "phi_twists",
    "psi_catalog",
    "psi_words",
    "select_e2",
    "ConstructionController",
    "chain_rewrite_plan",
    "lemma41",
    "rewritten_chain",
    "PipelineReport",
    "StageRecord",
    "StageRunner",
    "TrivialityWitness",
    "THEOREM1",
    "build_theorem1",
    "check_witness",
    "find_witness",
    "THEOREM2",
    "build_theorem2",
    "certificate_basis",
    "pi1_stages",
    "reduce_pi1",
    "u_n_display",
]
