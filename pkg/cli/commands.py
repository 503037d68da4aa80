"""
Command Handlers

One handler per subcommand. Handlers receive the parsed arguments and the
resolved configuration, write one document to standard output and return
the process exit code.
"""

import logging
from typing import Any, Dict, List

from core.configs import configuration_table, family_degree, irreducible_estimate, required_degrees
from core.errors import DomainError, RecipeError
from core.exactmath import format_rational
from core.graphs import type_statistics
from core.invariants import InvariantEngine, InvariantKind, InvariantRequest
from core.legendrian import (
    contact_pairing,
    contact_plane,
    is_contact,
    osculation_multiplicity,
    parse_curve,
    parse_point,
    second_intersection,
)

from .errors import EXIT_OK, EXIT_USAGE, handle_engine_errors
from .output import write_csv, write_json, write_text

logger = logging.getLogger(__name__)


def _reject_dot(args) -> bool:
    if args.format == 'dot':
        logger.error("--format dot is only available for the graphs command")
        return True
    return False


@handle_engine_errors
def cmd_compute(args, config) -> int:
    """Evaluate N_d or the line-incidence count by localization."""
    if _reject_dot(args):
        return EXIT_USAGE
    engine = InvariantEngine.from_config(config)
    request = InvariantRequest(args.degree, InvariantKind.parse(args.invariant))
    result = engine.compute(request, explicit_specs=args.lambdas or (), min_agreement=args.agree)

    if args.format == 'json':
        write_json(result.to_dict(timing=config.output.timing))
    elif args.format == 'csv':
        write_csv(
            ['degree', 'kind', 'value', 'is_integer', 'graph_classes'],
            [[result.degree, result.kind.value, format_rational(result.value),
              result.is_integer, result.graph_class_count]],
        )
    else:
        rows = [
            ('value', format_rational(result.value)),
            ('integer', result.is_integer),
            ('graph classes', result.graph_class_count),
        ]
        rows += [(f"lambda #{i}", ', '.join(spec.as_strings()))
                 for i, spec in enumerate(result.specializations_used)]
        if result.reference is not None:
            rows.append(('published', f"{result.reference} ({'match' if result.matches_reference else 'MISMATCH'})"))
        if config.output.timing:
            rows.append(('elapsed', f"{result.elapsed * 1000:.1f} ms"))
        write_text(f"{result.kind.value} invariant, degree {result.degree}", rows)
    return EXIT_OK


@handle_engine_errors
def cmd_graphs(args, config) -> int:
    """List fixed-point graph classes, or counts per combinatorial type."""
    engine = InvariantEngine.from_config(config)
    classes = engine.graphs(args.degree)

    if args.stats:
        summaries = type_statistics(classes)
        if args.format == 'json':
            write_json({
                'degree': args.degree,
                'graph_classes': len(classes),
                'types': [s.to_dict() for s in summaries],
            })
        elif args.format == 'csv':
            write_csv(
                ['colors', 'edges', 'count', 'a_gamma'],
                [[' '.join(map(str, s.representative.colors)),
                  ' '.join(f"{u}-{v}:{w}" for u, v, w in s.representative.edges),
                  s.count, s.a_gamma] for s in summaries],
            )
        elif args.format == 'dot':
            for index, s in enumerate(summaries):
                print(s.representative.to_dot(f"T{index}"))
        else:
            rows = [(' '.join(f"{u}-{v}:{w}" for u, v, w in s.representative.edges),
                     f"count={s.count}", f"a={s.a_gamma}") for s in summaries]
            write_text(f"Degree {args.degree}: {len(classes)} graph classes in {len(summaries)} types", rows)
        return EXIT_OK

    if args.format == 'json':
        write_json({
            'degree': args.degree,
            'graph_classes': len(classes),
            'classes': [c.to_dict() for c in classes],
        })
    elif args.format == 'csv':
        write_csv(
            ['index', 'colors', 'edges', 'aut_order', 'a_gamma'],
            [[i, ' '.join(map(str, c.representative.colors)),
              ' '.join(f"{u}-{v}:{w}" for u, v, w in c.representative.edges),
              c.aut_order, c.a_gamma] for i, c in enumerate(classes)],
        )
    elif args.format == 'dot':
        for index, c in enumerate(classes):
            print(c.representative.to_dot(f"G{index}"))
    else:
        rows = [(i, f"colors={list(c.representative.colors)}",
                 f"edges={[list(e) for e in c.representative.edges]}", f"aut={c.aut_order}")
                for i, c in enumerate(classes)]
        write_text(f"Degree {args.degree}: {len(classes)} graph classes", rows)
    return EXIT_OK


def _integral_invariant(engine: InvariantEngine, degree: int) -> int:
    result = engine.compute(InvariantRequest(degree, InvariantKind.CONTACT))
    if not result.is_integer:
        raise RecipeError(f"N_{degree} = {format_rational(result.value)} is not an integer")
    logger.info(f"N_{degree} = {result.value} from {len(result.specializations_used)} specializations")
    return result.value.numerator


@handle_engine_errors
def cmd_configs(args, config) -> int:
    """Reducible configuration counts with the irreducible estimate."""
    if _reject_dot(args):
        return EXIT_USAGE
    degree = family_degree(args.family)
    engine = InvariantEngine.from_config(config)
    invariants = {d: _integral_invariant(engine, d) for d in required_degrees(args.family)}
    table = configuration_table(args.family, invariants)
    n_d = invariants[degree]
    estimate = irreducible_estimate(degree, n_d, invariants)

    if args.format == 'json':
        document = table.to_dict()
        document['invariants'] = {str(d): n for d, n in invariants.items()}
        document['n_d'] = n_d
        document['irreducible_estimate'] = estimate
        write_json(document)
    elif args.format == 'csv':
        rows: List[List[Any]] = [[e.recipe.subconfiguration, e.recipe.name, e.count] for e in table.entries]
        rows.append(['', 'total', table.total])
        rows.append(['', 'irreducible_estimate', estimate])
        write_csv(['subconfiguration', 'name', 'count'], rows)
    else:
        rows = [(f"{e.recipe.subconfiguration} {e.recipe.name}", e.count) for e in table.entries]
        rows += [('total', table.total), (f"irreducible (N_{table.degree} = {n_d})", estimate)]
        write_text(f"Reducible contact {table.family}", rows, notes=[table.assumption])
    return EXIT_OK


def _legendrian_document(args) -> Dict[str, Any]:
    curve = parse_curve(args.curve)
    document: Dict[str, Any] = {
        'curve': str(curve),
        'degree': curve.degree,
        'contact': is_contact(curve),
    }
    if args.action == 'verify':
        document['pairing'] = str(contact_pairing(curve))
        return document

    point = parse_point(args.point)
    multiplicity = osculation_multiplicity(curve, point)
    document['point'] = [format_rational(x) for x in point]
    document['plane'] = [format_rational(x) for x in contact_plane(curve, point)]
    document['multiplicity'] = 'total' if multiplicity is None else multiplicity
    try:
        residual = second_intersection(curve, point)
    except DomainError:
        residual = None
    document['second_intersection'] = None if residual is None else [format_rational(x) for x in residual]
    return document


@handle_engine_errors
def cmd_legendrian(args, config) -> int:
    """Contact check or osculation order for an explicit curve."""
    if _reject_dot(args):
        return EXIT_USAGE
    document = _legendrian_document(args)

    if args.format == 'json':
        write_json(document)
    elif args.format == 'csv':
        keys = list(document)
        write_csv(keys, [[document[k] if not isinstance(document[k], list) else ':'.join(document[k])
                          for k in keys]])
    else:
        rows = [(key, value if not isinstance(value, list) else ' : '.join(value))
                for key, value in document.items() if key != 'curve']
        write_text(document['curve'], rows)
    return EXIT_OK
