"""
common > util > catch_exception_decorator

Contains `catchExceptionDecorator` which can be used to turn exceptions of a
certain type into a return value, for example a process exit code.

Authors:
* Maddy Guthridge [hello@maddyguthridge.com, HDSQ#2154]

This code is licensed under the GPL v3 license. Refer to the LICENSE file for
more details.
"""
from functools import wraps
from typing import Callable, Optional, TypeVar, Union
from typing_extensions import ParamSpec


P = ParamSpec("P")
T = TypeVar("T")
R = TypeVar("R")
ExcType = TypeVar("ExcType", bound=Exception)


def catchExceptionDecorator(
    exc_type: type[ExcType],
    callback: Optional[Callable[[ExcType], R]] = None,
) -> Callable[[Callable[P, T]], Callable[P, Union[T, R, None]]]:
    """
    A decorator for catching exceptions of a certain type, and optionally
    calling a given function when exceptions are given. The callback's return
    value becomes the return value of the decorated function.

    ### Args:
    * `exc_type` (`type[Exception]`): type of exception to catch
    * `callback` (`Callable`, optional): callback function for when exceptions
      are caught. Should accept a reference to the exception that was raised.

    ### Usage

    * Catch any `TypeError`s that happen within function `f`

    ```py
    @catchExceptionDecorator(TypeError)
    def f():
        ...
    ```

    * Catch any `NonConvergentError`s that happen within function `h`, and
      return the error's exit code instead

    ```py
    def g(err: NonConvergentError) -> int:
        print("The power sequence doesn't converge:", err)
        return err.exit_code

    @catchExceptionDecorator(NonConvergentError, callback=g)
    def h() -> int:
        ...
    ```
    """
    def decorator(func: Callable[P, T]) -> Callable[P, Union[T, R, None]]:
        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> Union[T, R, None]:
            try:
                return func(*args, **kwargs)
            except exc_type as e:
                if callback is not None:
                    return callback(e)
                return None
        return wrapper
    return decorator
