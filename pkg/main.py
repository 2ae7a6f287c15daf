# ==========================================================
# main.py — TP Verify API (sequences, minors, roots, quotients, theta)
# ==========================================================

from fastapi import FastAPI

from core.config import get_settings
from core.logger import configure_logging, get_logger
from quotients import routes as quotient_routes
from realroots import routes as root_routes
from seqcore import routes as sequence_routes
from theta import routes as theta_routes
from toeplitz import routes as toeplitz_routes

logger = get_logger("api")

# ==========================================================
# ✅ FASTAPI INITIALIZATION
# ==========================================================
app = FastAPI(title="TP Verify API", version="1.0")


@app.on_event("startup")
async def startup_event():
    settings = get_settings()
    configure_logging(settings.log_level)
    logger.info(f"🚀 TP Verify API started (order={settings.order}, window={settings.window}, "
                f"precision={settings.precision_bits} bits)")


# ==========================================================
# ✅ GENERAL APP INFO
# ==========================================================
@app.get("/")
async def root():
    return {"message": "TP Verify API is running!"}


@app.get("/health")
async def health_check():
    return {"status": "healthy", "message": "TP Verify API is operational"}


@app.get("/settings")
async def current_settings():
    return get_settings().model_dump()


# ==========================================================
# ✅ INCLUDE ROUTERS
# ==========================================================
app.include_router(sequence_routes.router)
app.include_router(toeplitz_routes.router)
app.include_router(root_routes.router)
app.include_router(quotient_routes.router)
app.include_router(theta_routes.router)
