from .certificate import (
    Certificate,
    ComponentCertificate,
    FourierFactor,
    GeneratorStep,
    PrimeModulus,
    PrimeSupport,
    SideData,
    SupportData,
    Verdict,
    Witness,
    dump_certificate,
    load_certificate,
    save_certificate,
)
from .fourier import FourierDecomposition, check_group_condition, fourier_decompose, pairing
from .pipeline import decide, decide_component
from .step1 import Purified, find_nonzero_minor, step1_bulatov_grohe
from .step2 import (
    TwinReduced,
    TwinSide,
    check_block_constant,
    check_unitary,
    d_tables,
    doubled_modulus,
    normalize_side,
    normalized_core,
    split_rank_one,
    step2_build_CD,
    step2_check_shapes,
    step2_normalize,
    twin_classes,
)
from .step3 import Structure, check_product, solve_generator, step3_structure
from .validate import recheck_witness, replay_component, validate_certificate

__all__ = [
    "Verdict",
    "Witness",
    "Certificate",
    "ComponentCertificate",
    "SideData",
    "SupportData",
    "PrimeSupport",
    "GeneratorStep",
    "FourierFactor",
    "PrimeModulus",
    "dump_certificate",
    "save_certificate",
    "load_certificate",
    "decide",
    "decide_component",
    "Purified",
    "find_nonzero_minor",
    "step1_bulatov_grohe",
    "TwinSide",
    "TwinReduced",
    "twin_classes",
    "d_tables",
    "step2_build_CD",
    "check_unitary",
    "check_block_constant",
    "split_rank_one",
    "step2_check_shapes",
    "doubled_modulus",
    "normalized_core",
    "normalize_side",
    "step2_normalize",
    "FourierDecomposition",
    "check_group_condition",
    "fourier_decompose",
    "pairing",
    "Structure",
    "check_product",
    "solve_generator",
    "step3_structure",
    "validate_certificate",
    "replay_component",
    "recheck_witness",
]
