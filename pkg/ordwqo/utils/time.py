import time
from functools import wraps

from ordwqo import workbench
from ordwqo.utils.log import ordwqo_log


def time_cal(func, func_name=None, report_name=None):
    """Time every call of ``func``.

    The elapsed seconds are logged at DEBUG, passed to ``Config.log_time_func`` when one is
    set, and recorded on the workbench report under ``report_name`` when it is given. Calls
    that raise are timed as well.

    :param func: the function to time.
    :param func_name: the name passed to ``log_time_func``, ``func.__name__`` by default.
    :param report_name: the operation name on ``workbench.report``, e.g. the suite name.
    """
    name = func.__name__ if func_name is None else func_name

    @wraps(func)
    def inner(*args, **kwargs):
        time_start = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            delta_time = time.perf_counter() - time_start
            ordwqo_log.debug("%s took %.4fs", name, delta_time)
            if workbench.config.log_time_func:
                workbench.config.log_time_func(name, delta_time)
            if report_name is not None:
                workbench.report.record(report_name, delta_time)

    return inner
