from dotenv import load_dotenv

load_dotenv()  # EKR_* settings overrides for test runs
