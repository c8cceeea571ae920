"""Exact rational-homotopy computations on differential graded algebras."""

from .blowup import (blowup_betti, lemma1_check, lemma2_check, massey_survives_connected_sum,
                     projectivize)
from .cohom import betti, betti_numbers, class_of, cohomology, cup, is_exact, ring_table
from .dga import DGA
from .grade import Element, GeneratorSpec, GradedAlgebra
from .massey import formality_scan, triple_massey
from .models import (LieAlgebra, abelian, chevalley_eilenberg, cpn, heisenberg, jacobi_check,
                     kodaira_thurston, tensor_with_circle, vn)
from .parse import parse_element
from .symp import (SymplecticForm, hard_lefschetz, kodaira_thurston_form, mathieu_evidence,
                   omega_standard)

__version__ = "0.1.0"
