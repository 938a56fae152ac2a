"""Search budget resolution."""

import logging
import os

from constants import BUDGET_ENV_VAR, NAKAYAMA_SEARCH_BUDGET, TRIVEXT_SEARCH_BUDGET
from errors import InvalidInputError
from messages import ErrorMessages

logger = logging.getLogger(__name__)


def _override() -> int | None:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(ErrorMessages.BAD_BUDGET.format(var=BUDGET_ENV_VAR, value=raw)) from None
    if value < 0:
        raise InvalidInputError(ErrorMessages.BAD_BUDGET.format(var=BUDGET_ENV_VAR, value=raw))
    logger.info("search budget overridden by %s=%d", BUDGET_ENV_VAR, value)
    return value


def trivext_budget() -> int:
    """Largest fundamental domain (orbit objects) searched exhaustively."""
    override = _override()
    return TRIVEXT_SEARCH_BUDGET if override is None else override


def nakayama_budget() -> int:
    """Largest number of non-projective indecomposables searched exhaustively."""
    override = _override()
    return NAKAYAMA_SEARCH_BUDGET if override is None else override
