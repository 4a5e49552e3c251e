from rectpack.instances.files import (
    InstanceFile,
    RectangleRecord,
    instance_document,
    load,
    load_coloring,
    load_id_list,
    parse_instance,
    save,
    write_json,
)
from rectpack.instances.generators import GeneratorSpec, generate

__all__ = [
    "GeneratorSpec",
    "InstanceFile",
    "RectangleRecord",
    "generate",
    "instance_document",
    "load",
    "load_coloring",
    "load_id_list",
    "parse_instance",
    "save",
    "write_json",
]
