from typing import Iterable

from quadrature.exceptions import DomainError

from .checks import THEOREM_CLAIMS
from .claims import AS_DERIVED, AS_PRINTED, COMMON, InequalityClaim
from .lemmas import LEMMA_CLAIMS

CLAIMS: tuple[InequalityClaim, ...] = (*THEOREM_CLAIMS, *LEMMA_CLAIMS)

CLAIM_IDS: tuple[str, ...] = tuple(dict.fromkeys(claim.id for claim in CLAIMS))

# claims that solve for x instead of taking it from the grid
ROOT_CLAIM_IDS = frozenset(claim.id for claim in CLAIMS if not claim.domain.uses_x)

_BY_KEY = {claim.key: claim for claim in CLAIMS}
_POSITION = {claim.key: position for position, claim in enumerate(CLAIMS)}

VARIANT_FILTERS = {
    "all": (COMMON, AS_DERIVED, AS_PRINTED),
    "as-derived": (COMMON, AS_DERIVED),
    "as-printed": (COMMON, AS_PRINTED),
}


def by_key(key: str) -> InequalityClaim:
    try:
        return _BY_KEY[key]
    except KeyError:
        raise DomainError(f"Unknown claim '{key}'")


def position(claim_id: str, clause: str, variant: str) -> int:
    return _POSITION[f"{claim_id}|{clause}|{variant}"]


def select(ids: Iterable[str] = ("all",), variant: str = "all") -> list[InequalityClaim]:
    """
    Claims by id in registry order. ``all`` selects every claim, ``none`` nothing.

    :param ids: Claim ids such as T1 or L4; a prefix like T2 takes T2a, T2b and T2c.
    :param variant: all, as-derived or as-printed; common clauses belong to both.
    """
    if variant not in VARIANT_FILTERS:
        raise DomainError(f"Unknown variant filter '{variant}', expected one of {', '.join(VARIANT_FILTERS)}")
    ids = list(ids)
    if "none" in ids:
        return []

    wanted = set()
    for requested in ids:
        if requested == "all":
            wanted.update(CLAIM_IDS)
            continue
        matches = [claim_id for claim_id in CLAIM_IDS if claim_id == requested or claim_id.startswith(requested)]
        if not matches:
            raise DomainError(f"Unknown claim '{requested}', expected one of {', '.join(CLAIM_IDS)}")
        wanted.update(matches)

    allowed = VARIANT_FILTERS[variant]
    return [claim for claim in CLAIMS if claim.id in wanted and claim.variant in allowed]
