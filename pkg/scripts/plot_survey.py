import argparse
import csv
import logging
import os
import sys
from typing import Dict, List

import matplotlib.pyplot as plt
import numpy as np
import seaborn as sns

parser = argparse.ArgumentParser()
parser.add_argument(
    'survey_path', type=str, help='Survey CSV written by engel-sinks survey.'
)
parser.add_argument(
    'extremal_path', type=str, help='Extremal table CSV (--extremal).'
)
parser.add_argument(
    'results_path', type=str, help='Directory to save the plots in.'
)


def read_rows(path: str) -> List[Dict[str, str]]:
    with open(path, newline='') as handle:
        return list(csv.DictReader(handle))


def main(survey_path: str, extremal_path: str, results_path: str) -> None:
    """Plot |G| against the sink size m for every surveyed automorphism.

    Args:
        survey_path (str): Survey CSV.
        extremal_path (str): Extremal table CSV.
        results_path (str): Where the plots and the log go.
    """
    os.makedirs(results_path, exist_ok=True)
    logging.basicConfig(
        handlers=[
            logging.FileHandler(os.path.join(results_path, 'plot_survey.log')),
            logging.StreamHandler(sys.stdout)
        ]
    )
    logger = logging.getLogger('PlotSurvey')
    logger.setLevel(logging.DEBUG)

    rows = [row for row in read_rows(survey_path) if row['is_onto'] == 'true']
    extremal = read_rows(extremal_path)
    logger.info(f'{len(rows)} rows with G = [G,phi], {len(extremal)} extremes')

    colours = sns.color_palette('husl', 2)
    for column, title in (
        ('m_right_ext', 'right sink in G<phi>'),
        ('m_right_base', 'right sink seeded over G'),
    ):
        fig, ax = plt.subplots(figsize=(10, 5), constrained_layout=True)
        ax.set_title(
            f'|G| against the size m of the minimal {title}',
            fontsize=12,
            fontweight='medium'
        )
        m = np.array([int(row[column]) for row in rows])
        order = np.array([int(row['order']) for row in rows])
        ax.scatter(m, order, s=12, alpha=0.4, color=colours[0])

        best = sorted(
            (int(entry['m']), int(entry['max_order']))
            for entry in extremal if entry['column'] == column
        )
        if best:
            ax.plot(*zip(*best), marker='o', ls='--', color=colours[1])
            logger.info(f'{column}: largest |G| {max(b[1] for b in best)}')
        ax.set_xlabel('m')
        ax.set_ylabel('|G|')
        ax.set_yscale('log')
        lgd = fig.legend(
            ['(G, phi) pairs', 'largest |G| per m'],
            bbox_to_anchor=(1.04, 0.5),
            loc='center left'
        )
        fig.savefig(
            os.path.join(results_path, f'survey_{column}.png'),
            bbox_extra_artists=(lgd, ),
            bbox_inches='tight'
        )
        fig.clf()


if __name__ == '__main__':
    args = parser.parse_args()
    main(args.survey_path, args.extremal_path, args.results_path)
