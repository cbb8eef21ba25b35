"""Projective kinematics: Galileo, Poincare and Fantappie groups, the
Cayley-Klein metric of the projective space-time model, and the time and
space rescalings built on it."""
from .errors import (
    ConvergenceFailure,
    DegenerateChord,
    DomainError,
    NoRealIntersection,
    NonOrthogonal,
    ProjectiveInfinity,
    ProjkinError,
)
from .model import (
    DEFAULT_C,
    DEFAULT_R,
    Event,
    GaugeMode,
    GravCoordinate,
    HomogeneousPoint,
    MetricGauge,
    ModelParameters,
    NormalizedEvent,
    lift,
    make_parameters,
    project,
    signature_form,
)
from .groups import (
    ConvergenceReport,
    GalileoParams,
    GeneratorKind,
    GeneratorParams,
    GroupElement,
    PoincareElement,
    apply,
    boost,
    calibration_intersection,
    closed_form_apply,
    compose,
    fantappie_generator,
    galileo_apply,
    identity,
    inverse,
    limit_deviation,
    poincare_apply,
)
from .metric import PlanePoint, chord_endpoints, cross_ratio, space_distance, time_distance
from .scales import em_space_to_grav, em_time_to_grav, grav_space_to_em, grav_time_to_em
from .cosmology import clock_drift, compose_em_ages, drift_horizon, hubble, velocity_transform

__version__ = "0.1.0"
