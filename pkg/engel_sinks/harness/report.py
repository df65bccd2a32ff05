"""Verification reports, survey rows and their serializations."""
import csv
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, TextIO

SCHEMA_VERSION = 1

SURVEY_COLUMNS = (
    'group', 'order', 'phi', 'comm_order', 'is_onto', 'm_left', 'm_right_ext',
    'm_right_base'
)


class Outcome(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


@dataclass
class VerificationReport:
    """The outcome of one check on one subject.

    A failing report must name at least one witness; a skipped report
    carries the reason in ``reason``.
    """

    check_id: str
    subject: str
    outcome: Outcome
    witnesses: List = field(default_factory=list)
    reason: str = ''
    data: Dict = field(default_factory=dict)
    timing: Optional[float] = None

    def __post_init__(self):
        self.outcome = Outcome(self.outcome)
        if self.outcome is Outcome.FAIL and not self.witnesses:
            raise ValueError(
                'failing report of {} on {} has no witness'.format(
                    self.check_id, self.subject
                )
            )

    @property
    def failed(self) -> bool:
        return self.outcome is Outcome.FAIL

    def to_record(self, timings: bool = False) -> dict:
        record = {
            'schema': SCHEMA_VERSION,
            'check': self.check_id,
            'subject': self.subject,
            'outcome': self.outcome.value,
            'witnesses': list(self.witnesses),
            'reason': self.reason,
            'data': dict(self.data),
        }
        if timings and self.timing is not None:
            record['timing'] = round(self.timing, 6)
        return record


def passed(check_id: str, subject: str, data: Optional[dict] = None,
           vacuous: bool = False) -> VerificationReport:
    return VerificationReport(
        check_id,
        subject,
        Outcome.PASS,
        witnesses=['vacuous'] if vacuous else [],
        data=data or {}
    )


def failed(check_id: str, subject: str, witnesses: List,
           data: Optional[dict] = None) -> VerificationReport:
    return VerificationReport(
        check_id, subject, Outcome.FAIL, witnesses=witnesses, data=data or {}
    )


def skipped(check_id: str, subject: str, reason: str) -> VerificationReport:
    return VerificationReport(check_id, subject, Outcome.SKIPPED, reason=reason)


def verdict(check_id: str, subject: str, witnesses: List,
            data: Optional[dict] = None) -> VerificationReport:
    """Fail with ``witnesses`` if there are any, pass otherwise."""
    if witnesses:
        return failed(check_id, subject, witnesses, data)
    return passed(check_id, subject, data)


def dumps_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(',', ':'))


def write_jsonl(
    reports: Iterable[VerificationReport], handle: TextIO, timings: bool = False
) -> int:
    """Write one JSON line per report; returns the number written."""
    count = 0
    for report in reports:
        handle.write(dumps_record(report.to_record(timings)) + '\n')
        count += 1
    return count


@dataclass(frozen=True)
class SurveyRow:
    """Sink sizes of one automorphism of one group.

    ``simple`` is carried for the extremal table and is not a CSV column.
    """

    group: str
    order: int
    phi: str
    comm_order: int
    is_onto: bool
    m_left: int
    m_right_ext: int
    m_right_base: int
    simple: bool = field(default=False, compare=False)

    def to_dict(self) -> dict:
        return {column: getattr(self, column) for column in SURVEY_COLUMNS}


def write_survey_csv(rows: Iterable[SurveyRow], handle: TextIO) -> None:
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(SURVEY_COLUMNS)
    for row in rows:
        values = row.to_dict()
        values['is_onto'] = 'true' if row.is_onto else 'false'
        writer.writerow([values[column] for column in SURVEY_COLUMNS])


def extremal_table(rows: Iterable[SurveyRow]) -> List[dict]:
    """Largest ``|G|`` seen for each sink size among rows with ``G = [G, phi]``.

    ``m_right_ext`` is tabulated over every group, ``m_right_base`` over the
    simple groups only. Ties keep the group met first.
    """
    best = {}
    for row in rows:
        if not row.is_onto:
            continue
        keys = [('m_right_ext', row.m_right_ext)]
        if row.simple:
            keys.append(('m_right_base', row.m_right_base))
        for key in keys:
            if key not in best or row.order > best[key]['max_order']:
                best[key] = {
                    'column': key[0],
                    'm': key[1],
                    'max_order': row.order,
                    'group': row.group,
                }
    return [best[key] for key in sorted(best)]


def write_extremal_csv(table: List[dict], handle: TextIO) -> None:
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(('column', 'm', 'max_order', 'group'))
    for entry in table:
        writer.writerow(
            (entry['column'], entry['m'], entry['max_order'], entry['group'])
        )
