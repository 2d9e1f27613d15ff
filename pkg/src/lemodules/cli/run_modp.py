from argparse import ArgumentParser

from sympy import isprime

from lemodules import logger
from lemodules.cases import enumerate_cases
from lemodules.report import modp_section, scenario_report
from lemodules.utils import InvalidArgumentError

from . import SCENARIO_ARGS, BaseLeModulesCommand, add_arguments, scenario_from_args


def run_modp_command_factory(args):
    return RunModpCommand(args)


class RunModpCommand(BaseLeModulesCommand):
    @staticmethod
    def register_subcommand(parser: ArgumentParser):
        arg_list = SCENARIO_ARGS + [
            {
                "arg": "-p",
                "help": "Prime",
                "required": True,
                "type": int,
                "alias": ["--prime"],
                "dest": "p",
            },
            {
                "arg": "--case",
                "help": "Only this profile number",
                "type": int,
                "default": None,
            },
            {
                "arg": "--lambda0",
                "help": "Value of an unknown lambda^0 (default: least admissible per profile)",
                "type": int,
                "default": None,
            },
        ]
        run_modp_parser = parser.add_parser("modp", description="✨ Bounds on p-torsion from the Lê numbers")
        add_arguments(run_modp_parser, arg_list)
        run_modp_parser.set_defaults(func=run_modp_command_factory)

    def __init__(self, args):
        self.args = args
        if not isprime(self.args.p):
            raise InvalidArgumentError(f"-p must be a prime, got {self.args.p}")

    def run(self) -> int:
        scenario = scenario_from_args(self.args.file, self.args.le_numbers)
        profiles = list(enumerate(enumerate_cases(scenario), start=1))
        if profiles and self.args.case is not None:
            if not 1 <= self.args.case <= len(profiles):
                raise InvalidArgumentError(f"--case must be between 1 and {len(profiles)}, got {self.args.case}")
            profiles = [profiles[self.args.case - 1]]
        report = scenario_report(scenario)
        report.modp = modp_section(scenario, self.args.p, profiles, self.args.lambda0)
        print(report.to_json() if self.args.json else report.render())
        if not report.modp["cases"]:
            logger.warning("No admissible case")
            return 1
        return 0
