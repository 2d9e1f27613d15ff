from argparse import ArgumentParser

from lemodules.cyclotomic import expand, sorted_charpolys
from lemodules.utils import InvalidArgumentError, dump_json

from . import BaseLeModulesCommand, add_arguments


def run_charpoly_command_factory(args):
    return RunCharpolyCommand(args)


class RunCharpolyCommand(BaseLeModulesCommand):
    @staticmethod
    def register_subcommand(parser: ArgumentParser):
        arg_list = [
            {
                "arg": "--degree",
                "help": "Degree of the characteristic polynomial",
                "required": True,
                "type": int,
            },
            {
                "arg": "--trace",
                "help": "Trace of the monodromy",
                "required": True,
                "type": int,
            },
            {
                "arg": "--json",
                "help": "Print the structured report instead of text",
                "action": "store_true",
            },
        ]
        run_charpoly_parser = parser.add_parser(
            "charpoly",
            description="✨ Products of cyclotomic polynomials with a given degree and trace",
        )
        add_arguments(run_charpoly_parser, arg_list)
        run_charpoly_parser.set_defaults(func=run_charpoly_command_factory)

    def __init__(self, args):
        self.args = args
        if self.args.degree < 0:
            raise InvalidArgumentError(f"degree must be nonnegative, got {self.args.degree}")

    def run(self) -> int:
        found = sorted_charpolys(self.args.degree, self.args.trace)
        if self.args.json:
            payload = {
                "degree": self.args.degree,
                "trace": self.args.trace,
                "charpolys": [
                    {"multiset": ms.render(), "factors": ms.as_dict(), "polynomial": expand(ms).render()}
                    for ms in found
                ],
            }
            print(dump_json(payload))
        elif found:
            print("\n".join(f"{ms.render()} : {expand(ms).render()}" for ms in found))
        else:
            print(f"no product of cyclotomic polynomials has degree {self.args.degree} and trace {self.args.trace}")
        return 0 if found else 1
