from argparse import ArgumentParser

from lemodules.report import scenario_report

from . import SCENARIO_ARGS, BaseLeModulesCommand, add_arguments, scenario_from_args


def run_traces_command_factory(args):
    return RunTracesCommand(args)


class RunTracesCommand(BaseLeModulesCommand):
    @staticmethod
    def register_subcommand(parser: ArgumentParser):
        run_traces_parser = parser.add_parser("traces", description="✨ Lê-Milnor monodromy traces of a scenario")
        add_arguments(run_traces_parser, SCENARIO_ARGS)
        run_traces_parser.set_defaults(func=run_traces_command_factory)

    def __init__(self, args):
        self.args = args

    def run(self) -> int:
        scenario = scenario_from_args(self.args.file, self.args.le_numbers)
        report = scenario_report(scenario)
        print(report.to_json() if self.args.json else report.render())
        return 0
