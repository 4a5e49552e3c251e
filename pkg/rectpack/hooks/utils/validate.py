from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError
from typing import Callable, Type

from rectpack.errors import ValidationError
from rectpack.utils.logger import CLILogger


def validate(model_class: Type[BaseModel]):
    """
    Decorator factory to validate and parse parameters using a specified Pydantic model.

    The wrapped function receives the parsed model. Invalid parameters are
    logged and re-raised as ``rectpack.errors.ValidationError``.

    :param model_class: The Pydantic model class to validate against
    """
    def decorator(func: Callable):
        def wrapper(*args, **kwargs):
            try:
                params = model_class(**kwargs)
            except PydanticValidationError as e:
                first = e.errors()[0]
                field = ".".join(str(part) for part in first.get("loc", ())) or model_class.__name__
                message = f"{field}: {first['msg']}"
                CLILogger("validate").log(f"Validation error: {message}", "error")
                raise ValidationError(message) from None
            return func(params)
        wrapper.__name__ = func.__name__
        wrapper.__doc__ = func.__doc__
        return wrapper
    return decorator
