from rectpack.geom.instance import Instance
from rectpack.hooks.utils.validate import validate
from rectpack.instances.generators import GeneratorSpec, generate


@validate(GeneratorSpec)
def useGenerator(params: GeneratorSpec) -> Instance:
    """
    Generate an instance from keyword parameters.

    Args:
        params (GeneratorSpec): kind, n, seed, grid size and weight mode.
    """
    return generate(params)
