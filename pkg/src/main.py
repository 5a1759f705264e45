#!/usr/bin/env python3
"""
Rado - Moteur exact de nombres de Rado hors-diagonale

Programme principal en ligne de commande :
- compute : calcul exact de RR(E0, E1) et enregistrement au catalogue
- verify : vérification d'un fichier de coloriage
- witness : construction d'un coloriage témoin
- table : reproduction de la table des petites valeurs de RR_t(q,s)
- bounds : évaluation des formules fermées
- oracle : calcul par force brute pour N <= 25

La sortie standard ne porte que les réponses ; les journaux vont sur
l'erreur standard.
"""

import os
import sys
import logging
import logging.handlers
import argparse

# Ajouter le répertoire parent au chemin de recherche des modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Importer les modules de configuration
from src import config

# Importer les modules du projet
from src.bounds import closed_forms
from src.catalog.catalog import Catalog
from src.catalog.table import format_report, record_outcome, run_table
from src.colorings import witnesses
from src.colorings.coloring import load_coloring, save_coloring, write_coloring
from src.equations.linear import (
    equation_pair_from_f_form,
    f_form_parameters,
    parse_equation,
    render_equation,
    rr_exists_guaranteed,
)
from src.errors import (
    CheckedArithmeticError,
    ColoringFormatError,
    ConfigurationError,
    EquationParseError,
    InvalidEquationError,
    PreconditionError,
    ResourceCapError,
    SelfCheckError,
)
from src.oracle.exhaustive import exhaustive_rr
from src.oracle.validity import check_valid
from src.solver.search import Indeterminate, compute_rr

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3
EXIT_SELF_CHECK = 4

_installed_handlers = []


# Configurer le système de journalisation
def setup_logging(verbose=False):
    """Configure le système de journalisation (erreur standard, fichier optionnel)."""
    log_level = logging.DEBUG if verbose or config.DEBUG else getattr(logging, config.LOGGING_CONFIG["LEVEL"])
    log_file = config.LOGGING_CONFIG["FILE"]

    # Configurer le format des messages
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"

    root_logger = logging.getLogger()
    for handler in _installed_handlers:
        root_logger.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()

    # Gestionnaire de console sur l'erreur standard
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(log_format, date_format))
    _installed_handlers.append(console_handler)

    # Créer un gestionnaire de fichier avec rotation si demandé
    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=config.LOGGING_CONFIG["MAX_SIZE"],
            backupCount=config.LOGGING_CONFIG["BACKUP_COUNT"],
        )
        file_handler.setFormatter(logging.Formatter(log_format, date_format))
        _installed_handlers.append(file_handler)

    root_logger.setLevel(log_level)
    for handler in _installed_handlers:
        root_logger.addHandler(handler)

    return root_logger


def parse_t_range(text):
    """Lit "2", "2-4" ou "2,3" en liste d'entiers."""
    try:
        if "-" in text:
            low, high = (int(part) for part in text.split("-", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Intervalle de t invalide: {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"Intervalle de t invalide: {text!r}")
    return values


def positive_list(text):
    """Lit "2,1" en tuple d'entiers positifs."""
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Liste d'entiers invalide: {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"Entiers positifs requis: {text!r}")
    return values


def _equation_pair(args, parser):
    """Paire d'équations depuis --e0/--e1 ou --t/--q/--s."""
    if args.e0 is not None or args.e1 is not None:
        if args.e0 is None or args.e1 is None:
            parser.error("--e0 et --e1 vont ensemble")
        return parse_equation(args.e0), parse_equation(args.e1)
    if args.t is None or args.q is None or args.s is None:
        parser.error("Donner --e0/--e1 ou --t/--q/--s")
    return equation_pair_from_f_form(args.t, args.q, args.s)


def cmd_compute(args, parser):
    """Calcule RR(e0, e1), écrit le témoin et ajoute l'entrée au catalogue."""
    logger = logging.getLogger(__name__)
    e0, e1 = _equation_pair(args, parser)
    if not rr_exists_guaranteed(e0, e1):
        logger.warning(
            f"L'existence de RR({render_equation(e0)}, {render_equation(e1)}) n'est pas garantie: "
            "le balayage peut atteindre son plafond"
        )

    result = compute_rr(
        e0,
        e1,
        start_hint=args.start_hint,
        cap=args.cap,
        timeout=args.budget_seconds,
        total_budget=args.budget_seconds,
        subsumption=False if args.no_subsumption else None,
    )
    catalog = Catalog(args.catalog)
    fparams = f_form_parameters(e0, e1)

    if isinstance(result, Indeterminate):
        record_outcome(
            catalog, e0, e1, "indeterminate", result.lower_bound,
            fparams=fparams, stats=result.stats,
        )
        logger.error(f"Résultat indéterminé ({result.reason}) à N={result.N}")
        return EXIT_INDETERMINATE

    record_outcome(
        catalog, e0, e1, "exact", result.value,
        witness=result.witness,
        witness_dir=args.witness_dir,
        fparams=fparams,
        elapsed_ms=int(result.elapsed * 1000),
        stats=result.stats,
    )
    print(result.value)
    return EXIT_OK


def cmd_verify(args, parser):
    """Vérifie un fichier de coloriage contre une paire d'équations."""
    coloring = load_coloring(args.coloring)
    e0, e1 = parse_equation(args.e0), parse_equation(args.e1)
    report = check_valid(coloring, e0, e1)
    if report.valid:
        print("VALID")
        return EXIT_OK
    for solution in report.violations():
        print(",".join(str(v) for v in solution))
    return EXIT_INVALID


def _designated_pair(construction, t, q, s):
    """Paire (e0, e1) que la construction doit éviter."""
    if construction in ("thm21", "thm22"):
        return equation_pair_from_f_form(t, q, s)
    if construction == "gamma":
        return equation_pair_from_f_form(1, q, 1)
    if construction == "anomalous":
        return equation_pair_from_f_form(t, 2 * t + 1, t)
    return equation_pair_from_f_form(6, 13, 6)


def cmd_witness(args, parser):
    """Construit un témoin, le vérifie puis l'écrit."""
    logger = logging.getLogger(__name__)
    construction = args.construction
    required = {
        "thm21": ("t", "q", "s"),
        "thm22": ("t", "q", "s"),
        "gamma": ("q",),
        "anomalous": ("t",),
        "remark-t6": (),
    }[construction]
    missing = [name for name in required if getattr(args, name) is None]
    if missing:
        parser.error(f"Paramètres manquants pour {construction}: {', '.join('--' + m for m in missing)}")
    if construction == "thm21" and args.s < args.t:
        # t est le plus petit coefficient des deux équations
        raise PreconditionError(f"s >= t non respecté: s={args.s}, t={args.t}")

    coloring = witnesses.build_witness(construction, args.t, args.q, args.s)
    e0, e1 = _designated_pair(construction, args.t, args.q, args.s)
    report = check_valid(coloring, e0, e1)
    if not report.valid:
        raise SelfCheckError(
            f"Le témoin {construction} ne vérifie pas la paire "
            f"({render_equation(e0)}, {render_equation(e1)}): {report.violations()[:4]}"
        )
    logger.info(f"Témoin {construction} de [1,{coloring.N}] vérifié")

    if args.output:
        save_coloring(coloring, args.output)
        print(args.output)
    else:
        sys.stdout.write(write_coloring(coloring).decode("ascii"))
    return EXIT_OK


def cmd_table(args, parser):
    """Reproduit la table et écrit le rapport."""
    lines = run_table(
        args.t_range,
        q_max=args.q_max,
        budget=args.budget_seconds,
        workers=args.workers,
        catalog=Catalog(args.catalog),
        witness_dir=args.witness_dir,
        resume=args.resume,
        progress=not args.no_progress,
    )
    report = format_report(lines)
    sys.stdout.write(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            f.write(report)
    if any(line.status != "exact" for line in lines):
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_bounds(args, parser):
    """Affiche chaque formule applicable sous la forme "nom valeur"."""
    values = []
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            parser.error("--a et --b vont ensemble")
        values.append(("exact_multivar_rr1", closed_forms.exact_multivar_rr1(args.a, args.b)))
    else:
        if args.t is None or args.q is None:
            parser.error("Donner --t et --q (et --s ou --diagonal), ou --a/--b")
        s = args.q if args.diagonal else args.s
        if s is None:
            parser.error("Donner --s ou --diagonal")
        values = closed_forms.applicable_values(args.t, args.q, s)
    if not values:
        raise PreconditionError("Aucune formule ne s'applique à ces paramètres")
    for name, value in values:
        print(f"{name} {value}")
    return EXIT_OK


def cmd_oracle(args, parser):
    """Calcule RR par force brute sur [1, cap]."""
    e0, e1 = parse_equation(args.e0), parse_equation(args.e1)
    max_n = config.ORACLE_CONFIG["MAX_N"]
    if args.cap > max_n:
        parser.error(f"--cap limité à {max_n}")
    value = exhaustive_rr(e0, e1, args.cap)
    if value is None:
        logging.getLogger(__name__).error(f"Tous les N <= {args.cap} admettent un coloriage valide")
        return EXIT_INDETERMINATE
    print(value)
    return EXIT_OK


def add_run_arguments(parser, default):
    """Options de catalogue, de témoins et de budget de compute et table."""
    parser.add_argument('--catalog', type=str, default=default,
                        help=f"Catalogue JSONL (défaut: {config.CATALOG_CONFIG['PATH']})")
    parser.add_argument('--witness-dir', type=str, default=default,
                        help=f"Répertoire des témoins (défaut: {config.CATALOG_CONFIG['WITNESS_DIR']})")
    parser.add_argument('--budget-seconds', type=float, default=default,
                        help=f"Budget en secondes par calcul (défaut: {config.SOLVER_CONFIG['TIMEOUT']:g})")


def build_parser():
    """Construit l'analyseur d'arguments."""
    parser = argparse.ArgumentParser(
        prog="rado", description="Rado - Moteur exact de nombres de Rado hors-diagonale"
    )
    parser.add_argument('--config', type=str, help='Fichier YAML de surcharge de la configuration')
    parser.add_argument('--verbose', '-v', action='store_true', help='Journalisation détaillée (DEBUG)')
    add_run_arguments(parser, default=None)

    # Mêmes options après la sous-commande ; sans valeur, celle de la racine reste
    run_options = argparse.ArgumentParser(add_help=False)
    add_run_arguments(run_options, default=argparse.SUPPRESS)

    subparsers = parser.add_subparsers(dest="command", required=True)

    def pair_arguments(sub, f_form=True):
        sub.add_argument('--e0', type=str, help='Équation à éviter en rouge, ex. "2,3,-1"')
        sub.add_argument('--e1', type=str, help='Équation à éviter en bleu')
        if f_form:
            sub.add_argument('--t', type=int, help='Coefficient de x')
            sub.add_argument('--q', type=int, help='Coefficient de y dans E0')
            sub.add_argument('--s', type=int, help='Coefficient de y dans E1')

    compute = subparsers.add_parser('compute', parents=[run_options], help='Calculer RR(E0, E1)')
    pair_arguments(compute)
    compute.add_argument('--start-hint', type=int, help='Point de départ du balayage')
    compute.add_argument('--cap', type=int, help='Plus grand N examiné')
    compute.add_argument('--no-subsumption', action='store_true', help='Garder les clauses subsumées')
    compute.set_defaults(handler=cmd_compute)

    verify = subparsers.add_parser('verify', help='Vérifier un fichier de coloriage')
    verify.add_argument('--coloring', type=str, required=True, help='Fichier de coloriage')
    verify.add_argument('--e0', type=str, required=True)
    verify.add_argument('--e1', type=str, required=True)
    verify.set_defaults(handler=cmd_verify)

    witness = subparsers.add_parser('witness', help='Construire un coloriage témoin')
    witness.add_argument('--construction', required=True,
                         choices=["thm21", "thm22", "gamma", "anomalous", "remark-t6"])
    witness.add_argument('--t', type=int)
    witness.add_argument('--q', type=int)
    witness.add_argument('--s', type=int)
    witness.add_argument('--output', '-o', type=str, help='Fichier de sortie (défaut: sortie standard)')
    witness.set_defaults(handler=cmd_witness)

    table = subparsers.add_parser('table', parents=[run_options], help='Reproduire la table des petites valeurs')
    table.add_argument('--t-range', type=parse_t_range, required=True, help='Valeurs de t: "2", "2-4" ou "2,3"')
    table.add_argument('--q-max', type=int, default=None,
                       help=f"Plus grand q (défaut: {config.TABLE_CONFIG['Q_MAX']})")
    table.add_argument('--workers', type=int, default=None, help='Nombre de processus de calcul')
    table.add_argument('--resume', action='store_true', help='Sauter les entrées déjà exactes au catalogue')
    table.add_argument('--report', type=str, help='Écrire aussi le rapport dans ce fichier')
    table.add_argument('--no-progress', action='store_true', help='Masquer la barre de progression')
    table.set_defaults(handler=cmd_table)

    bounds = subparsers.add_parser('bounds', help='Évaluer les formules fermées')
    bounds.add_argument('--t', type=int)
    bounds.add_argument('--q', type=int)
    bounds.add_argument('--s', type=int)
    bounds.add_argument('--diagonal', action='store_true', help='Cas diagonal s = q')
    bounds.add_argument('--a', type=positive_list, help='Coefficients a_i de x + sum a_i y_i = z')
    bounds.add_argument('--b', type=positive_list, help='Coefficients b_i de x + sum b_i y_i = z')
    bounds.set_defaults(handler=cmd_bounds)

    oracle = subparsers.add_parser('oracle', help='Calculer RR par force brute (N <= 25)')
    pair_arguments(oracle, f_form=False)
    oracle.add_argument('--cap', type=int, default=config.ORACLE_CONFIG["MAX_N"])
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv=None):
    """Fonction principale du programme."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.config:
            config.load_overrides(args.config)
    except (OSError, ConfigurationError) as e:
        print(f"Erreur de configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    # Configurer le système de journalisation
    logger = setup_logging(args.verbose)

    if args.command == "oracle" and (args.e0 is None or args.e1 is None):
        parser.error("--e0 et --e1 sont requis")

    try:
        return args.handler(args, parser)
    except SelfCheckError as e:
        logger.critical(f"Échec de l'auto-vérification: {e}")
        return EXIT_SELF_CHECK
    except ResourceCapError as e:
        logger.error(f"Plafond de ressources atteint: {e}")
        return EXIT_INDETERMINATE
    except (
        EquationParseError,
        InvalidEquationError,
        PreconditionError,
        CheckedArithmeticError,
        ColoringFormatError,
        OSError,
    ) as e:
        logger.error(f"Erreur: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
