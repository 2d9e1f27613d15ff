from argparse import ArgumentParser

from lemodules import logger
from lemodules.report import bounds_section, scenario_report

from . import SCENARIO_ARGS, BaseLeModulesCommand, add_arguments, scenario_from_args


def run_bounds_command_factory(args):
    return RunBoundsCommand(args)


class RunBoundsCommand(BaseLeModulesCommand):
    @staticmethod
    def register_subcommand(parser: ArgumentParser):
        run_bounds_parser = parser.add_parser("bounds", description="✨ Lower bounds on the Lê numbers")
        add_arguments(run_bounds_parser, SCENARIO_ARGS)
        run_bounds_parser.set_defaults(func=run_bounds_command_factory)

    def __init__(self, args):
        self.args = args

    def run(self) -> int:
        scenario = scenario_from_args(self.args.file, self.args.le_numbers)
        report = scenario_report(scenario)
        report.bounds, feasible = bounds_section(scenario)
        print(report.to_json() if self.args.json else report.render())
        if not feasible:
            logger.warning("Some given Lê numbers cannot carry a quasi-unipotent monodromy")
            return 1
        return 0
