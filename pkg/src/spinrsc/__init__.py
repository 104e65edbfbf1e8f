"""Remote state creation through homogeneous spin-1/2 XY chains.

The package simulates how an arbitrary one-excitation state prepared on the
first two nodes of a homogeneous chain shows up on the last node, and how a
unitary acting on the last two nodes (the extended receiver) enlarges the
set of receiver states that can be created remotely.  The workhorse is the
2x2 matrix of transition amplitudes from the sender pair to the receiver
pair: its singular value decomposition yields the optimal sender state, the
optimal receiver-side unitary and the maximal transfer probability in one
step.
"""

from .chain import (
    Coupling,
    CouplingModel,
    SpectralDecomposition,
    build_couplings,
    build_hamiltonian,
    chain_decomposition,
    spectral_decompose,
)
from .errors import (
    DegenerateProtocolError,
    EigensolverError,
    MaximumNotFoundError,
    SpinRscError,
)
from .optimize import (
    CriticalLength,
    Objective,
    OptimalProtocol,
    SingularPair,
    SvdTriple,
    SweepModel,
    SweepRow,
    critical_length,
    maximize_over_time,
    objective_series,
    optimal_protocol,
    optimal_sender_state,
    rmax_no_v,
    singular_values,
    svd_decompose,
    sweep,
)
from .oracle import (
    TransferMode,
    full_hamiltonian,
    full_transition_amplitude,
    sample_max_transfer,
)
from .propagate import (
    FVector,
    SenderState,
    amplitude_matrix,
    amplitude_series,
    polar_turns,
    sender_to_f,
    transition_amplitude,
)
from .rsc import (
    ControlParams,
    CoverageReport,
    CreatableParams,
    RegionRow,
    apply_v_and_reduce,
    beta2_coverage,
    control_to_amplitudes,
    creatable_params,
    create_state,
    extended_eigenvalues,
    extended_receiver_density,
    receiver_from_params,
    region_grid,
)

__version__ = "0.1.0"
