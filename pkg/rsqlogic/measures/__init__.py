"""
Measurement algebra on finite-dimensional spaces.

Here is a quick help to navigate this subpackage:
- `DensityMatrix` validates mixed states, `Pvm` and `Povm` validate measures on construction.
- `born` holds the Born rule, the raw `⟨ξ|Π|η⟩` matrix element, the Gram-inverse generalized
projector onto the span of non-orthogonal vectors, and projector diagnostics.
- `pvm` builds PVMs from a basis and implements the product, union and complement rules.
- `naimark` compresses a joint-space PVM to a system-space POVM and evaluates joint
probabilities through relative states.
"""
# flake8: noqa
from .born import born_probability
from .born import check_projector
from .born import general_projector
from .born import matrix_element
from .born import ProjectorDiagnostics
from .density import DensityMatrix
from .naimark import isometry
from .naimark import naimark_compress
from .naimark import relative_state_probability
from .povm import Povm
from .pvm import element_complement
from .pvm import element_product
from .pvm import element_union
from .pvm import Pvm
from .pvm import pvm_from_basis
