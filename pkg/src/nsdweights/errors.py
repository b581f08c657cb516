"""Exception types shared across the package."""


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Disconnected(GraphError):
    pass


class NonBipartite(GraphError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"odd cycle {self.cycle}")


class NotATree(GraphError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, copies, budget):
        self.copies = copies
        self.budget = budget
        super().__init__(f"{copies} edge copies exceed the oracle budget of {budget}")


class OddTotal(GraphError):
    pass


class BothSidesOdd(GraphError):
    pass


class PreconditionViolated(GraphError):
    def __init__(self, clause):
        self.clause = clause
        super().__init__(clause)


class InvalidRecipe(GraphError):
    pass


class NotOMC(GraphError):
    pass


class NotSimpleOMC(NotOMC):
    pass


class IsK2(GraphError):
    pass


class InvalidSpec(GraphError):
    pass


class DegreeNotOne(GraphError):
    pass


class NonBridgeAtNeighbour(GraphError):
    pass
