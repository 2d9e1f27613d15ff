from argparse import ArgumentParser

from lemodules import logger
from lemodules.report import cases_section, scenario_report

from . import SCENARIO_ARGS, BaseLeModulesCommand, add_arguments, parse_sweep, scenario_from_args


def run_cases_command_factory(args):
    return RunCasesCommand(args)


class RunCasesCommand(BaseLeModulesCommand):
    @staticmethod
    def register_subcommand(parser: ArgumentParser):
        arg_list = SCENARIO_ARGS + [
            {
                "arg": "--sweep",
                "help": "Enumerate cases for every value of a Lê number, J=A..B",
                "type": str,
                "default": None,
            },
        ]
        run_cases_parser = parser.add_parser("cases", description="✨ Enumerate admissible Lê module complexes")
        add_arguments(run_cases_parser, arg_list)
        run_cases_parser.set_defaults(func=run_cases_command_factory)

    def __init__(self, args):
        self.args = args
        self.sweep = parse_sweep(self.args.sweep) if self.args.sweep else None

    def run(self) -> int:
        scenario = scenario_from_args(self.args.file, self.args.le_numbers)
        if self.sweep is None:
            scenarios = [scenario]
        else:
            j, values = self.sweep
            scenarios = [scenario.with_le_number(j, value) for value in values]

        report = scenario_report(scenario)
        report.cases = []
        total = 0
        for variant in scenarios:
            section, profiles = cases_section(variant, first_profile=total + 1)
            report.cases.append(section)
            total += len(profiles)
        print(report.to_json() if self.args.json else report.render())
        if total == 0:
            logger.warning("No admissible case")
            return 1
        return 0
