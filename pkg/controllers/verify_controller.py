"""
`icx verify`: check a code certificate against a graph.
"""
import logging
from pathlib import Path
from typing import Annotated, Optional

import orjson
import typer

from coding.code_builder import verify_certificate
from controllers.common import InputOption, LogLevelOption, configure_logging, emit, load_graph
from models.certificate import read_certificate
from utils.exceptions import VerificationFailedException

logger = logging.getLogger(__name__)
router = typer.Typer()


@router.command("verify")
def verify(
        input: InputOption,
        certificate: Annotated[Path, typer.Option("--certificate", "-c", help="Certificate JSON file")],
        trials: Annotated[Optional[int], typer.Option("--trials", min=0, help="Random decode trials")] = None,
        seed: Annotated[Optional[int], typer.Option("--seed", help="Seed of the decode trials")] = None,
        log_level: LogLevelOption = None,
):
    """Exit 0 iff the certificate passes the rank test and the decode simulation."""
    configure_logging(log_level)
    g = load_graph(input)
    cert = read_certificate(certificate)
    verdict = verify_certificate(g, cert, trials=trials, seed=seed)
    if not verdict.passed:
        raise VerificationFailedException(verdict.vertex, verdict.vector_index, verdict.reason)
    logger.info(f"certificate verified: rate {cert.rate.value} over GF({cert.modulus})")
    emit(orjson.dumps({"passed": True, "rate": cert.rate.value, "modulus": cert.modulus},
                      option=orjson.OPT_SORT_KEYS), None)
