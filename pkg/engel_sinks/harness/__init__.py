from .report import (  # noqa
    SCHEMA_VERSION, SURVEY_COLUMNS, Outcome, SurveyRow, VerificationReport,
    dumps_record, extremal_table, write_extremal_csv, write_jsonl,
    write_survey_csv
)
from .subjects import AutomorphismSubject, ElementSubject, GroupContext  # noqa
from .checks import (  # noqa
    REGISTRY, Check, check_abelian_order, check_baer, check_cyclic_sylow_bound,
    check_generation, check_ids, check_involution_case, check_lemma_2_2,
    check_lemma_2_4, check_lemma_2_5, register, select_checks
)
from .runner import map_groups, run_checks, run_group  # noqa
from .survey import survey, survey_group  # noqa
