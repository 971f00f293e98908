import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from src.api.routes import check, decompose, generate, query, system
from src.config import settings
from src.formats import load_input
from src.pipeline import decompose as run_decompose

# triangle: a single degenerate root over three leaves
SELF_TEST_GRAPH = "3 3 undirected\n0 1\n1 2\n0 2\n"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Startup and shutdown events for the application.
    """
    logging.basicConfig(level=settings.log_level)

    # Startup: make sure the engine decomposes a known instance
    try:
        root = run_decompose(load_input(SELF_TEST_GRAPH)).root
        if root.kind.value != "degenerate":
            raise RuntimeError(f"K3 root typed {root.kind.value}")
        print("✓ Decomposition engine ready")
    except Exception as e:
        print(f"✗ Decomposition engine failed its self-test: {e}")
        raise

    if settings.threads > 1:
        print(f"✓ Using {settings.threads} worker threads")
    else:
        print("⚠ Running single-threaded (set HOMODEC_THREADS to parallelize)")

    yield

    # Shutdown
    print("Shutting down...")


# Create FastAPI app
app = FastAPI(
    title="homodec - Homogeneous Decomposition API",
    description="""
    Decomposition of homogeneous relations (graphs, digraphs, 2-structures,
    bipartite graphs, arbitrary relations) into strong homogeneous sets.

    ## Features

    1. Decompose: Strong-set tree with prime, degenerate and linear nodes
    2. Query: Smallest homogeneous set, maximal homogeneous sets, triviality
    3. Check: Axioms, family closure, submodularity, brute-force agreement
    4. Generate: Seeded random instances

    ## Getting Started

    1. Generate an instance with `/api/generate` or bring an edge list
    2. Decompose it with `/api/decompose`
    """,
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(decompose.router)
app.include_router(query.router)
app.include_router(check.router)
app.include_router(generate.router)
app.include_router(system.router)


@app.get("/")
async def root():
    """
    Root endpoint with API information
    """
    return {
        "name": "homodec API",
        "version": "1.0.0",
        "docs": "/docs",
        "health": "/api/health",
        "status": "running"
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "src.app:app",
        host=settings.host,
        port=settings.port,
        reload=False,
        log_level="info"
    )
