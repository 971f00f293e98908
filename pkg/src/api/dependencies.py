"""
Dependency injection for API services.
"""
from src.api.services import CheckService, DecompositionService, GeneratorService, QueryService

# Initialize services (singleton pattern)
decomposition_service = DecompositionService()
query_service = QueryService()
check_service = CheckService()
generator_service = GeneratorService()
