"""Sink sizes of every automorphism in scope, for the empirical bound tables."""
import logging
from typing import List

from ..config import default_jobs, default_tier
from ..groups.catalog import build, catalog_names
from .report import SurveyRow
from .runner import map_groups
from .subjects import GroupContext

logger = logging.getLogger(__name__)


def survey_group(name: str) -> List[SurveyRow]:
    """One row per automorphism subject of the catalog group ``name``.

    A class representative standing for several inner automorphisms is
    expanded to one row per class member; sink sizes agree across a class.
    """
    ctx = GroupContext(build(name))
    group = ctx.group
    rows = []
    for subject in ctx.automorphisms:
        phi = subject.phi
        values = dict(
            group=name,
            order=group.order,
            comm_order=ctx.commutator(phi).order,
            is_onto=ctx.is_onto(phi),
            m_left=ctx.left(phi).size,
            m_right_ext=ctx.right(phi, 'extension').size,
            m_right_base=ctx.right(phi, 'base').size,
            simple=ctx.simple
        )
        if subject.members:
            labels = [
                'inner{}'.format(group.describe(g)) for g in subject.members
            ]
        else:
            labels = [phi.label]
        rows.extend(SurveyRow(phi=label, **values) for label in labels)
    logger.debug('surveyed %s: %d rows', name, len(rows))
    return rows


def survey(tier: int = None, jobs: int = None,
           progress: bool = False) -> List[SurveyRow]:
    """Survey rows for the catalog up to ``tier``, in catalog order."""
    tier = default_tier() if tier is None else tier
    jobs = default_jobs() if jobs is None else jobs
    names = catalog_names(tier)
    per_group = map_groups(survey_group, names, jobs, progress, desc='survey')
    return [row for rows in per_group for row in rows]
