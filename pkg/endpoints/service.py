from core.metrics import observe_fem

from services.spectral_service import SpectralService



# Один сервис на приложение; длительности FEM уходят в Prometheus
spectral_service = SpectralService(observer=observe_fem)
