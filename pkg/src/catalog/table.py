"""
Module pour la reproduction de la table des petites valeurs de RR_t(q,s).

Chaque entrée (t, q, s) est calculée, comparée à la valeur publiée et à la
borne thm22, puis enregistrée dans le catalogue.
"""

import os
import sys
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import yaml
from tqdm import tqdm

from src import config
from src.bounds.closed_forms import lower_bound_thm22
from src.catalog.catalog import Catalog, CatalogEntry, witness_filename
from src.colorings.coloring import save_coloring
from src.equations.linear import equation_pair_from_f_form, render_equation
from src.errors import ConfigurationError
from src.solver.search import Indeterminate, compute_rr

# Configuration du logger
logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

REPORT_HEADER = f"{'t':>3} {'q':>3} {'s':>3} {'computed':>9} {'table':>6} {'bound_thm22':>12}"


@dataclass(frozen=True)
class TableRow:
    t: int
    q: int
    s: int
    value: int
    starred: bool = False
    note: str = ""


@dataclass
class InstanceOutcome:
    """Résultat du calcul d'une entrée, transmis par les processus de calcul."""

    t: int
    q: int
    s: int
    status: str
    value: int
    witness: object = None
    elapsed_ms: int = 0
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0


@dataclass
class ReportLine:
    t: int
    q: int
    s: int
    computed: Optional[int]
    status: str
    table: Optional[TableRow]
    bound: int
    flags: List[str] = field(default_factory=list)

    def render(self):
        if self.status == "exact":
            computed = str(self.computed)
        else:
            computed = f">={self.computed}"
        if self.table is None:
            table = "-"
        else:
            table = f"{self.table.value}{'*' if self.table.starred else ''}"
        line = f"{self.t:>3} {self.q:>3} {self.s:>3} {computed:>9} {table:>6} {self.bound:>12}"
        if self.flags:
            line += "  FLAG " + ",".join(self.flags)
        return line


def load_table(path=None) -> Dict[Triple, TableRow]:
    """
    Charge les valeurs publiées.

    Args:
        path (str): Fichier YAML (TABLE_CONFIG["DATA_FILE"] par défaut)

    Returns:
        dict: {(t, q, s): TableRow}
    """
    path = path or config.TABLE_CONFIG["DATA_FILE"]
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict) or "rows" not in data:
        raise ConfigurationError(f"Fichier de table invalide: {path}")
    rows = {}
    for item in data["rows"]:
        row = TableRow(**item)
        rows[(row.t, row.q, row.s)] = row
    logger.debug(f"{len(rows)} valeurs publiées chargées depuis {path}")
    return rows


def table_instances(t_values, q_max, table=None) -> List[Triple]:
    """
    Entrées hors-diagonale t <= s < q <= q_max, plus les lignes publiées de
    même t au-delà de q_max, triées par (t, s, q).
    """
    instances = set()
    for t in t_values:
        for s in range(t, q_max):
            for q in range(s + 1, q_max + 1):
                instances.add((t, q, s))
    if table:
        instances.update(k for k in table if k[0] in t_values)
    return sorted(instances, key=lambda k: (k[0], k[2], k[1]))


def compute_instance(t, q, s, budget=None, start_hint=None) -> InstanceOutcome:
    """Calcule RR_t(q,s) sous un budget en secondes."""
    if budget is None:
        budget = config.TABLE_CONFIG["BUDGET_SECONDS"]
    e0, e1 = equation_pair_from_f_form(t, q, s)
    result = compute_rr(e0, e1, start_hint=start_hint, timeout=budget, total_budget=budget)
    if isinstance(result, Indeterminate):
        return InstanceOutcome(
            t, q, s, "indeterminate", result.lower_bound,
            decisions=result.stats.decisions,
            propagations=result.stats.propagations,
            conflicts=result.stats.conflicts,
        )
    return InstanceOutcome(
        t, q, s, "exact", result.value,
        witness=result.witness,
        elapsed_ms=int(result.elapsed * 1000),
        decisions=result.stats.decisions,
        propagations=result.stats.propagations,
        conflicts=result.stats.conflicts,
    )


def _compute_packed(args):
    return compute_instance(*args)


def record_outcome(catalog, e0, e1, status, value, witness=None, witness_dir=None,
                   fparams=None, elapsed_ms=0, stats=None):
    """
    Écrit le témoin éventuel et ajoute l'entrée au catalogue.

    Args:
        catalog (Catalog): Catalogue cible
        e0, e1 (LinearEquation): La paire
        status (str): exact | lower_bound | upper_bound | indeterminate
        value (int): Valeur ou borne
        witness (Coloring): Témoin de [1, value-1] pour une entrée exacte
        witness_dir (str): Répertoire des témoins
        fparams (tuple): (t, q, s) quand la paire est de forme tx+jy=z
        stats: Objet portant decisions, propagations, conflicts

    Returns:
        CatalogEntry: L'entrée ajoutée
    """
    e0_text, e1_text = render_equation(e0), render_equation(e1)
    witness_path = None
    if witness is not None:
        witness_dir = witness_dir or config.CATALOG_CONFIG["WITNESS_DIR"]
        os.makedirs(witness_dir, exist_ok=True)
        witness_path = os.path.join(witness_dir, witness_filename(e0_text, e1_text, witness.N))
        save_coloring(witness, witness_path)
    t, q, s = fparams if fparams else (None, None, None)
    entry = CatalogEntry(
        e0=e0_text,
        e1=e1_text,
        t=t,
        q=q,
        s=s,
        value=value,
        status=status,
        witness_path=witness_path,
        elapsed_ms=elapsed_ms,
        decisions=getattr(stats, "decisions", 0),
        propagations=getattr(stats, "propagations", 0),
        conflicts=getattr(stats, "conflicts", 0),
    )
    catalog.append(entry)
    return entry


def compare(t, q, s, computed, status, table_row) -> ReportLine:
    """Construit une ligne de rapport et ses motifs de signalement."""
    bound = lower_bound_thm22(t, q, s)
    line = ReportLine(t, q, s, computed, status, table_row, bound)
    exact = status == "exact"
    if table_row is not None:
        if exact and computed != table_row.value:
            line.flags.append("table!=computed")
        if not table_row.starred and bound != table_row.value:
            line.flags.append("bound!=table")
    starred = table_row is not None and table_row.starred
    if exact and not starred and bound != computed:
        line.flags.append("bound!=computed")
    return line


def run_table(
    t_values,
    q_max=None,
    budget=None,
    workers=None,
    catalog: Optional[Catalog] = None,
    witness_dir=None,
    resume=False,
    table=None,
    progress=True,
):
    """
    Calcule toutes les entrées et renvoie les lignes du rapport.

    Les calculs peuvent tourner dans plusieurs processus ; l'ordre des
    résultats et les écritures dans le catalogue restent ceux de la liste
    des entrées.

    Returns:
        list: ReportLine dans l'ordre (t, s, q)
    """
    q_max = q_max or config.TABLE_CONFIG["Q_MAX"]
    workers = workers or config.TABLE_CONFIG["WORKERS"]
    catalog = catalog or Catalog()
    table = table if table is not None else load_table()

    instances = table_instances(t_values, q_max, table)
    known = catalog.exact_values() if resume else {}

    todo = []
    for t, q, s in instances:
        e0, e1 = equation_pair_from_f_form(t, q, s)
        if (render_equation(e0), render_equation(e1)) not in known:
            todo.append((t, q, s, budget))
    logger.info(f"{len(instances)} entrées, {len(instances) - len(todo)} déjà exactes dans le catalogue")

    computed = {}
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(_compute_packed, todo)
            for outcome in tqdm(results, total=len(todo), desc="Table", file=sys.stderr, disable=not progress):
                computed[(outcome.t, outcome.q, outcome.s)] = outcome
    else:
        for args in tqdm(todo, desc="Table", file=sys.stderr, disable=not progress):
            outcome = compute_instance(*args)
            computed[(outcome.t, outcome.q, outcome.s)] = outcome

    lines = []
    for key in instances:
        t, q, s = key
        e0, e1 = equation_pair_from_f_form(t, q, s)
        outcome = computed.get(key)
        if outcome is None:
            entry = known[(render_equation(e0), render_equation(e1))]
            lines.append(compare(t, q, s, entry.value, entry.status, table.get(key)))
            continue
        record_outcome(
            catalog, e0, e1, outcome.status, outcome.value,
            witness=outcome.witness,
            witness_dir=witness_dir,
            fparams=key,
            elapsed_ms=outcome.elapsed_ms,
            stats=outcome,
        )
        line = compare(t, q, s, outcome.value, outcome.status, table.get(key))
        if line.flags:
            logger.warning(f"Écart pour (t,q,s)={key}: {', '.join(line.flags)}")
        lines.append(line)
    return lines


def format_report(lines):
    """Rapport texte: en-tête puis une ligne par entrée."""
    return "\n".join([REPORT_HEADER] + [line.render() for line in lines]) + "\n"
