"""Exact certificates for the skew linear maximal monotone operator T on c0."""

from ._c0mono import (
    CertificateFailure,
    ConfigError,
    EmptySample,
    ExtensionPoint,
    GraphPoint,
    GraphSampler,
    InvalidParameter,
    NonSummable,
    ParseError,
    Sequence,
    Violation,
    closure_margin,
    distinctness,
    extension_point,
    fitzpatrick_gap,
    fitzpatrick_value,
    gossez_apply,
    l1_norm,
    monotone_product,
    pairing,
    range_member,
    run_suite,
    sup_norm,
    t_solve,
    total_sum,
    unit_u,
    unit_v,
    violation_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
