"""Molecular parameter extraction with a self-contained Hartree-Fock backend."""
from .extract import (ExtractionRequest, coefficient_norms, extract,
                      low_rank_factorize, write_record)
from .scf import SCFError, SCFResult, run_scf
from .verify import VerificationReport, verify_schema

__version__ = "0.1.0"
__all__ = ["ExtractionRequest", "SCFError", "SCFResult",
           "VerificationReport", "coefficient_norms", "extract",
           "low_rank_factorize", "run_scf", "verify_schema", "write_record"]
