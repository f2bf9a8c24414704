"""spinorlab: free spin-1/2 spinors, non-unitary boosts, covariant states, axis solver."""

from .tensor import (
    FourVector,
    Rapidity,
    herm_sqrt2,
    mat_exp,
    minkowski_dot,
    momentum_from_rapidity,
    momentum_from_rapidity_vector,
)
from .dirac import GammaSet, sigma_contract, slash, weyl_gammas
from .lorentz import (
    SpinorTransform,
    VectorBoost,
    boost_parameters,
    generator,
    group_element,
    inverse,
    rotation_parameters,
    spinor_boost,
    spinor_boost_rapidity,
    vector_boost,
)
from .states import (
    ANTIPARTICLE,
    PARTICLE,
    DensityMatrix,
    Spinor,
    bar_product,
    bloch,
    bloch_compose,
    current,
    density,
    dual,
    expectation,
    from_record,
    pure_density,
    rest_spinor,
    sigma_ops,
    spinor,
    spinor_sqrt_form,
    superpose,
    to_record,
    trace_powers,
    transform,
)
from .measurement import (
    MeasurementAxis,
    axis_ket,
    expectation_closed_form,
    measurement_operator,
    rest_particle_axis,
    solve_axis,
    solve_axis_oracle,
    spin_expectation,
)
from .scenario import (
    ScenarioConfig,
    SweepRow,
    satellite_momentum,
    scenario_axis,
    sweep,
)

__version__ = "0.1.0"
