import dataclasses
import logging

from celery import shared_task

from .claims import ClaimPoint
from .registry import by_key
from .reports import evaluate

logger = logging.getLogger(__name__)


@shared_task
def evaluate_chunk(items: list[dict], tol: float) -> list[dict]:
    """
    Evaluate a chunk of (claim key, point) items.

    :return: Report fields as plain dicts, in item order.
    """
    logger.info("Evaluating chunk of %d claim points", len(items))
    rows = []
    for item in items:
        report = evaluate(by_key(item["claim"]), ClaimPoint.from_dict(item["point"]), tol)
        rows.append(dataclasses.asdict(report))
    logger.info("Chunk done")
    return rows
