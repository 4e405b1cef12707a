import psutil

from loguru import logger

from prometheus_client import Counter, Gauge, Histogram



# Технические метрики
REQUEST_COUNT = Counter(
    'http_requests_total',
    'Total HTTP Requests',
    ['method', 'endpoint', 'status_code']
)

REQUEST_DURATION = Histogram(
    'http_request_duration_seconds',
    'HTTP request duration in seconds',
    ['method', 'endpoint']
)


# Системные метрики
CPU_USAGE = Gauge('cpu_usage_percent', 'CPU usage percentage')
MEMORY_USAGE = Gauge('memory_usage_mb', 'Memory usage in MB')


# Метрики вычислений
BOUND_REPORTS = Counter(
    'bound_reports_total',
    'Bound reports produced, by best formula',
    ['formula']
)

FEM_SOLVE_DURATION = Histogram(
    'fem_solve_duration_seconds',
    'Duration of FEM eigenvalue computations',
    ['operation'],
    buckets=(0.05, 0.1, 0.25, 0.5, 1, 2.5, 5, 10, 30, 60, 120)
)

FEM_DOF_COUNT = Gauge('fem_dof_count', 'Unknowns in the last FEM solve')


def observe_fem(operation: str, seconds: float, dofs: int) -> None:
    FEM_SOLVE_DURATION.labels(operation=operation).observe(seconds)
    FEM_DOF_COUNT.set(dofs)


def update_system_metrics() -> None:
    """Обновление системных метрик с обработкой ошибок"""
    try:
        cpu_percent = psutil.cpu_percent(interval=None)
        CPU_USAGE.set(cpu_percent)

        memory_used_mb = psutil.virtual_memory().used / 1024 / 1024
        MEMORY_USAGE.set(memory_used_mb)
        logger.debug(f"System metrics updated - CPU: {cpu_percent}%, Memory: {memory_used_mb:.2f}MB")

    except Exception as e:
        logger.error(f"Error updating system metrics: {e}")
