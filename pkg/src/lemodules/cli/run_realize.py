from argparse import ArgumentParser

from lemodules import logger
from lemodules.cases import enumerate_cases
from lemodules.report import realization_section, scenario_report
from lemodules.utils import InvalidArgumentError

from . import SCENARIO_ARGS, BaseLeModulesCommand, add_arguments, scenario_from_args


def run_realize_command_factory(args):
    return RunRealizeCommand(args)


class RunRealizeCommand(BaseLeModulesCommand):
    @staticmethod
    def register_subcommand(parser: ArgumentParser):
        arg_list = SCENARIO_ARGS + [
            {
                "arg": "--case",
                "help": "Profile number, as listed by `lemodules cases`",
                "required": True,
                "type": int,
            },
            {
                "arg": "--lambda0",
                "help": "Value of an unknown lambda^0 (default: least admissible)",
                "type": int,
                "default": None,
            },
        ]
        run_realize_parser = parser.add_parser("realize", description="✨ Build and verify an integer witness")
        add_arguments(run_realize_parser, arg_list)
        run_realize_parser.set_defaults(func=run_realize_command_factory)

    def __init__(self, args):
        self.args = args

    def run(self) -> int:
        scenario = scenario_from_args(self.args.file, self.args.le_numbers)
        profiles = enumerate_cases(scenario)
        report = scenario_report(scenario)
        if not profiles:
            print(report.to_json() if self.args.json else report.render())
            logger.warning("No admissible case to realize")
            return 1
        if not 1 <= self.args.case <= len(profiles):
            raise InvalidArgumentError(f"--case must be between 1 and {len(profiles)}, got {self.args.case}")
        report.realization = realization_section(
            scenario, self.args.case, profiles[self.args.case - 1], self.args.lambda0
        )
        print(report.to_json() if self.args.json else report.render())
        if not report.realization["verification"]["passed"]:
            logger.error("The witness did not verify")
            return 1
        return 0
