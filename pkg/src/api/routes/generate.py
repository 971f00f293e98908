from fastapi import APIRouter, Depends

from src.api.models import ErrorResponse, GenerateRequest, GenerateResponse
from src.api.routes import http_error
from src.api.services import GeneratorService

router = APIRouter(prefix="/api/generate", tags=["Generate"])


# Dependency
def get_generator_service():
    from src.api.dependencies import generator_service
    return generator_service


@router.post("", response_model=GenerateResponse, responses={400: {"model": ErrorResponse}})
async def generate_instance(request: GenerateRequest,
                            generator_service: GeneratorService = Depends(get_generator_service)):
    """
    Generate a seeded random instance as an edge list.

    - **model**: gnp, digraph, tournament, transitive, bipartite or 2structure
    - **n**: Number of vertices
    - **p**: Edge probability (default: 0.5)
    - **seed**: Random seed (default: 0)
    """
    try:
        g, text = generator_service.generate(request.model, request.n, p=request.p, seed=request.seed,
                                             colors=request.colors, directed=request.directed)
        return GenerateResponse(n=g.n, m=len(g.edges), text=text)

    except Exception as e:
        raise http_error(e, "Generation")
